from mfperc.tree.analytics import *
from mfperc.tree.sampling import *
from mfperc.tree.checks import *
