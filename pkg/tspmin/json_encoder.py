import json

import numpy as np

from .cnf import Assignment
from .oracles import Verdict
from .tsp import Tour


class NpEncoder(json.JSONEncoder):
    '''
    JSON encoder for the values found in tspmin documents:
    numpy scalars and arrays (distance matrices, city ids), tours, assignments and verdicts.
    '''
    def default(self, obj):
        '''
        Parameters
        ----------
        obj: np.integer, np.ndarray, Tour, Assignment, Verdict or other serializable object
            numpy values become their python equivalents, a Tour its list of cities,
            an Assignment its "1=T,2=F" text, a Verdict its value.
        '''
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Tour):
            return list(obj.cities)
        if isinstance(obj, Assignment):
            return obj.format()
        if isinstance(obj, Verdict):
            return obj.value
        return super(NpEncoder, self).default(obj)
