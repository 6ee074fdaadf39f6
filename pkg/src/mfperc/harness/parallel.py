from multiprocessing import Pool
from typing import Callable, Sequence, TypeVar, List, Optional

from mfperc import env_var
from mfperc.annotations import MfpercCancel
from mfperc.util import log

__all__ = [
    "parallel_map"
]

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], tasks: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """
    Applies ``func`` to every task, in worker processes if ``workers > 1``. Results keep the order of the tasks.
    Tasks carry their own seeds, so results do not depend on the number of workers.

    :param func: A picklable top-level function.
    :param tasks: Picklable arguments.
    :param workers: Process count. Defaults to ``MFPERC_WORKERS``.
    :raises MfpercCancel: If the run is interrupted. Worker processes are terminated first.
    """
    workers = env_var.default_workers() if workers is None else max(1, workers)
    try:
        if workers == 1 or len(tasks) < 2:
            return [func(task) for task in tasks]

        log(f"Running {len(tasks)} tasks on {workers} processes")
        with Pool(processes=workers) as pool:
            return pool.map(func, tasks)
    except KeyboardInterrupt:
        raise MfpercCancel(f"Interrupted after starting {len(tasks)} tasks") from None
