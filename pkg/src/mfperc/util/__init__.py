from mfperc.util.io import *
from mfperc.util.path import *
from mfperc.util.seeding import *
from mfperc.util.numeric import *
