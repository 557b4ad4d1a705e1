'''
CNF data model: literals, clauses, formulas and assignments,
DIMACS parsing and emission, evaluation, and the dummy-variable augmentation.

The augmentation adds one fresh variable z = n+1, positively, to every clause.
The augmented formula is always satisfied by the all-true assignment, and
any of its satisfying assignments with z = false satisfies the original formula.
'''
from dataclasses import dataclass, field

from .exceptions import DimacsError
from .utils import build_boolean_dict

booleandict = build_boolean_dict()


@dataclass(frozen=True, order=True)
class Literal:
    '''
    A variable (1-based index) with a polarity.
    '''
    variable: int
    positive: bool = True

    def __post_init__(self):
        if not isinstance(self.variable, int) or self.variable < 1:
            raise ValueError("Literal variable must be a positive integer, got %r." %(self.variable,))

    @classmethod
    def from_int(cls, value):
        '''DIMACS integer, e.g. -2 -> Literal(2, positive=False).'''
        if value == 0:
            raise ValueError("0 is not a literal.")
        return cls(abs(value), value > 0)

    def to_int(self):
        return self.variable if self.positive else -self.variable

    def is_true(self, value):
        '''Truth of this literal when its variable has the given value.'''
        return value if self.positive else not value

    def __str__(self):
        return str(self.to_int())


@dataclass(frozen=True)
class Clause:
    '''
    Disjunction of literals. Order is kept; repeated literals are dropped at construction.
    A clause may hold both x and -x.
    '''
    literals: tuple = ()

    def __post_init__(self):
        unique = tuple(dict.fromkeys(self.literals))
        for lit in unique:
            if not isinstance(lit, Literal):
                raise TypeError("Clause entries must be Literal instances, got %r." %(lit,))
        object.__setattr__(self, 'literals', unique)

    @classmethod
    def from_ints(cls, values):
        return cls(tuple(Literal.from_int(v) for v in values))

    def to_ints(self):
        return [lit.to_int() for lit in self.literals]

    @property
    def variables(self):
        return {lit.variable for lit in self.literals}

    def occurs(self, variable, positive):
        return Literal(variable, positive) in self.literals

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)


@dataclass(frozen=True)
class CnfFormula:
    '''
    Conjunction of clauses over variables 1..num_variables.
    '''
    num_variables: int
    clauses: tuple = ()

    def __post_init__(self):
        if self.num_variables < 0:
            raise ValueError("num_variables must be nonnegative.")
        object.__setattr__(self, 'clauses', tuple(self.clauses))
        for clause in self.clauses:
            for lit in clause:
                if lit.variable > self.num_variables:
                    raise ValueError("Literal %s exceeds num_variables=%d." %(lit, self.num_variables))

    @classmethod
    def from_lists(cls, num_variables, list_clauses):
        '''
        Build from DIMACS-style integer lists, e.g. CnfFormula.from_lists(2, [[1, -2]]).
        '''
        return cls(num_variables, tuple(Clause.from_ints(c) for c in list_clauses))

    def to_lists(self):
        return [c.to_ints() for c in self.clauses]

    @property
    def num_clauses(self):
        return len(self.clauses)


@dataclass(frozen=True)
class AugmentedFormula:
    '''
    The pair (phi, phi^z): base formula and its copy with z = n+1 appended, positively,
    as the last literal of every clause.
    '''
    base: CnfFormula
    dummy_variable: int
    augmented: CnfFormula


@dataclass(frozen=True)
class Assignment:
    '''
    Total assignment over variables 1..len(values); values[i-1] is the value of variable i.
    '''
    values: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(bool(v) for v in self.values))

    @classmethod
    def from_dict(cls, mapping, num_variables=None):
        '''
        Build from {variable: bool}; the keys must be exactly 1..num_variables.
        '''
        if num_variables is None:
            num_variables = len(mapping)
        if set(mapping) != set(range(1, num_variables + 1)):
            raise ValueError("Assignment must cover exactly variables 1..%d, got %s."
                             %(num_variables, sorted(mapping)))
        return cls(tuple(mapping[i] for i in range(1, num_variables + 1)))

    @classmethod
    def all_true(cls, num_variables):
        return cls((True,) * num_variables)

    @classmethod
    def parse(cls, text, num_variables=None):
        '''
        Read the comma separated form '1=T,2=F'. Values accept T/F, true/false, 1/0.
        An empty string is the empty assignment.
        '''
        mapping = {}
        text = text.strip()
        if text:
            for item in text.split(','):
                try:
                    key, value = item.split('=')
                    variable = int(key.strip())
                    value = value.strip()
                    value = booleandict[int(value) if value.isdigit() else value]
                except (ValueError, KeyError):
                    raise ValueError("Cannot read assignment entry %r, expecting index=T|F." %item)
                if variable in mapping:
                    raise ValueError("Variable %d assigned twice." %variable)
                mapping[variable] = value
        return cls.from_dict(mapping, num_variables)

    def format(self):
        return ','.join("%d=%s" %(i, 'T' if v else 'F') for i, v in enumerate(self.values, 1))

    @property
    def num_variables(self):
        return len(self.values)

    def __getitem__(self, variable):
        if not 1 <= variable <= len(self.values):
            raise KeyError(variable)
        return self.values[variable - 1]

    def as_dict(self):
        return {i: v for i, v in enumerate(self.values, 1)}

    def extend(self, value):
        '''Append one more variable with the given value.'''
        return Assignment(self.values + (bool(value),))

    def restrict(self, num_variables):
        '''Keep variables 1..num_variables.'''
        if num_variables > len(self.values):
            raise ValueError("Cannot restrict %d variables to %d." %(len(self.values), num_variables))
        return Assignment(self.values[:num_variables])


# -----------------------------------------------------------------------------
# DIMACS
# -----------------------------------------------------------------------------

def parse_dimacs(text):
    '''
    Parse DIMACS CNF text into a CnfFormula.

    Parameters
    ----------
    text : str or iterable of lines
        comment lines 'c ...', one header 'p cnf <n> <m>', then clauses as
        whitespace separated nonzero integers, each terminated by 0.
        Clauses may span lines. A line starting with '%' ends the clause section.

    Returns
    -------
    CnfFormula, with repeated literals inside a clause collapsed.

    Raises
    ------
    DimacsError
        malformed header, literal out of range, empty clause, unterminated clause,
        or a clause count different from the header, with line number.
    '''
    lines = text.splitlines() if isinstance(text, str) else list(text)
    num_variables, num_clauses = None, None
    clauses, pending = [], []
    line_number = 0
    for line_number, line in enumerate(lines, 1):
        words = line.split()
        if not words or words[0].startswith('c'):
            continue
        if words[0].startswith('%'):
            break
        if words[0] == 'p':
            if num_variables is not None:
                raise DimacsError("second header line", line_number)
            if len(words) != 4 or words[1] != 'cnf':
                raise DimacsError("malformed header %r, expecting 'p cnf <n> <m>'" %line.strip(), line_number)
            try:
                num_variables, num_clauses = int(words[2]), int(words[3])
            except ValueError:
                raise DimacsError("malformed header %r, counts must be integers" %line.strip(), line_number)
            if num_variables < 0 or num_clauses < 0:
                raise DimacsError("negative count in header", line_number)
            continue
        if num_variables is None:
            raise DimacsError("clause before header", line_number)
        for word in words:
            try:
                value = int(word)
            except ValueError:
                raise DimacsError("not an integer: %r" %word, line_number)
            if value == 0:
                if not pending:
                    raise DimacsError("empty clause", line_number)
                clauses.append(Clause.from_ints(pending))
                pending = []
            elif abs(value) > num_variables:
                raise DimacsError("literal %d out of range 1..%d" %(value, num_variables), line_number)
            else:
                pending.append(value)

    if num_variables is None:
        raise DimacsError("missing header 'p cnf <n> <m>'", line_number or None)
    if pending:
        raise DimacsError("clause not terminated by 0", line_number)
    if len(clauses) != num_clauses:
        raise DimacsError("header declares %d clauses, found %d" %(num_clauses, len(clauses)), line_number)
    return CnfFormula(num_variables, tuple(clauses))


def read_dimacs(path):
    with open(path) as f:
        return parse_dimacs(f.read())


def emit_dimacs(formula):
    '''
    DIMACS text of formula, without comments; parse_dimacs reproduces it exactly.
    '''
    s = "p cnf %d %d\n" %(formula.num_variables, formula.num_clauses)
    for clause in formula.clauses:
        s += ' '.join([str(x) for x in clause.to_ints()] + ['0']) + '\n'
    return s


# -----------------------------------------------------------------------------
# Semantics
# -----------------------------------------------------------------------------

def augment_with_dummy(phi):
    '''
    Add the dummy variable z = n+1, positively and last, to every clause of phi.

    Returns
    -------
    AugmentedFormula with base phi unchanged.
    '''
    z = phi.num_variables + 1
    augmented = CnfFormula(
        z, tuple(Clause(clause.literals + (Literal(z, True),)) for clause in phi.clauses)
    )
    return AugmentedFormula(base=phi, dummy_variable=z, augmented=augmented)


def evaluate(formula, assignment):
    '''
    True iff every clause holds a literal made true by assignment.
    A formula without clauses is true.

    Raises
    ------
    ValueError
        if the assignment is not over exactly the formula's variables.
    '''
    if assignment.num_variables != formula.num_variables:
        raise ValueError("Assignment over %d variables given for a formula over %d."
                         %(assignment.num_variables, formula.num_variables))
    return all(
        any(lit.is_true(assignment[lit.variable]) for lit in clause)
        for clause in formula.clauses
    )
