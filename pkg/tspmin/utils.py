# tspmin utils is a catchall for reused code that doesn't fit into a specific module.

import multiprocessing as mp
import sys

import tqdm


def build_boolean_dict():
    return {
        'T': True,
        'F': False,
        1: True,
        0: False,
        'True': True,
        'False': False,
        'TRUE': True,
        'FALSE': False,
        'true': True,
        'false': False
    }

def format_flag(value):
    '''T or F, the spelling used in all text reports.'''
    return 'T' if value else 'F'

def debug_print(verbose, to_print):
    '''
    Diagnostics go to stderr; stdout carries artifacts (tours, reports).
    Bind verbose with functools.partial.
    '''
    if verbose:
        print(to_print, file=sys.stderr)

def bulk_process(command, arguments, multicores=4, progress=True):
    '''
    Map command over arguments in a process pool, keeping input order.

    Parameters
    ----------
    command : callable
        picklable function of one argument.
    arguments : list
        one entry per job.
    multicores : int, optional, default: 4
        number of worker processes, capped by cpu count; 0 uses all cores,
        1 runs in this process.
    progress : bool, optional, default: True
        show a tqdm progress bar.
    '''
    if not arguments:
        raise ValueError("No Arguments Provided")
    if multicores == 0:
        multicores = mp.cpu_count()
    multicores = min(multicores, mp.cpu_count(), len(arguments))
    if multicores <= 1:
        return [command(x) for x in tqdm.tqdm(arguments, desc="processing...", disable=not progress)]
    with mp.Pool(multicores) as client:
        pbar = tqdm.tqdm(client.imap(command, arguments), total=len(arguments),
                         desc="processing...", disable=not progress)
        return [x for x in pbar]
