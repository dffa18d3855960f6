import sys

from paragame.cli import run

sys.exit(run())
