from mfperc.graph.core import *
from mfperc.graph.generators import *
from mfperc.graph.lps import *
from mfperc.graph.diagnostics import *
from mfperc.graph.io import *
from mfperc.graph.families import *
