# ruff: noqa: F401, F403

from .augment import *
from .cage import *
from .catalog import *
from .certificate import *
from .curves import *
from .diagram import *
from .embroidery import *
from .exceptions import *
from .io import *
from .surface_map import *
from .types import *
from .utils import *
