# Here are default values of parameters. Please do NOT modify unless necessary.
#
# One can specify parameters via
# 1) custom parameters.yaml
# 2) commandline arguments
# Priority is: commandline overwriting parameters.yaml overwriting this file.
#
# Defaults are sized for desk-scale formulas (a handful of variables and clauses).
# Only the search budget may need attention on larger inputs, via --budget.
#
PARAMETERS = {
    # search oracles
    'budget': 5000000,                  # max nodes explored by any exhaustive search before
                                        # it answers budget-exceeded instead of yes/no
    'held_karp_max_dimension': 18,      # Held-Karp refuses larger instances
    'brute_force_max_dimension': 10,    # permutation scan refuses larger instances

    # artifacts
    'meta_schema_version': '1.0',       # readers reject a different major version
    'tsplib_name': 'tspmin',            # NAME field of emitted TSPLIB files

    # corpus self-check
    'corpus_file_pattern': '.cnf',      # files with this substring are read as DIMACS
    'multicores': 4,                    # number of worker processes, 0 for all cores

    'verbose': False,                   # diagnostic messages on stderr
    }


# exit codes of the command line driver
EXIT_OK = 0
EXIT_VERIFICATION_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3
