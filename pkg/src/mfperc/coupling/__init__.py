from mfperc.coupling.covering_tree import *
from mfperc.coupling.purity import *
from mfperc.coupling.joint import *
from mfperc.coupling.bounds import *
