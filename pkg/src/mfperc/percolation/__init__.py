from mfperc.percolation.sampling import *
from mfperc.percolation.components import *
from mfperc.percolation.exploration import *
from mfperc.percolation.geometry import *
