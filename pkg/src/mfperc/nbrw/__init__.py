from mfperc.nbrw.edge_space import *
from mfperc.nbrw.walk import *
