import sys

from .main import main as run


def main(argv=None):
    sys.exit(run(argv))
