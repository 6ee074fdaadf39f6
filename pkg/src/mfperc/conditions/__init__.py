from mfperc.conditions.statistics import *
from mfperc.conditions.bounds import *
