from mfperc.util.seeding import derive_seed
from mfperc.harness.config import *
from mfperc.harness.records import *
from mfperc.harness.parallel import *
from mfperc.harness.experiments import *
from mfperc.harness.checks import *
