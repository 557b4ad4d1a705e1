__version__ = "0.3.0"

from . import certificates
from . import cnf
from . import command_line
from . import default_parameters
from . import exceptions
from . import gadgets
from . import graphs
from . import json_encoder
from . import lowering
from . import main
from . import oracles
from . import rhc
from . import tsp
from . import utils
from . import workflow
