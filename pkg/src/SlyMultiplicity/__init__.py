__version__ = '0.1.0'

from .errors import *
from .monomial import *
from .quotient import *
from .module import *
from .fitting import *
from .theorem import *
from .instance import *
from .campaign import *
