'''
Exceptions raised across the reduction pipeline.
The command line driver maps them to exit codes, see main.run_tspmin.
'''


class ReductionError(Exception):
    '''Base class for every error raised by tspmin.'''


class DimacsError(ReductionError, ValueError):
    '''
    Malformed DIMACS CNF input, reported with the offending line number.
    '''
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        self.message = message
        if line_number is None:
            super().__init__(message)
        else:
            super().__init__("line %d: %s" %(line_number, message))


class TsplibError(ReductionError, ValueError):
    '''Unsupported TSPLIB variant or malformed TSPLIB text.'''


class TourFormatError(ReductionError, ValueError):
    '''Malformed tour file.'''


class MetaDocumentError(ReductionError, ValueError):
    '''Unknown schema version, or a meta document that disagrees with its formula.'''


class CertificateError(ReductionError, ValueError):
    '''A certificate does not meet the precondition of its translation.'''


class InternalInconsistency(ReductionError, RuntimeError):
    '''
    A stage contract is broken, e.g. a Hamiltonian cycle of the tripled graph
    whose triples are not consecutive. Signals corrupted input or a construction bug.
    '''


class BudgetExceeded(ReductionError):
    '''An exact solver would need more work than its budget allows.'''
