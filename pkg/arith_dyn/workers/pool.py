from concurrent.futures import ProcessPoolExecutor

from arith_dyn.logger import logger


def parallel_map(func, items, workers=1, chunksize=None):
    """map(func, items) over a process pool, results in input order.

    ``func`` must be a module-level function so it can be pickled. With
    one worker everything runs inline in this process.
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    if chunksize is None:
        chunksize = max(1, len(items) // (4 * workers))
    logger.debug(
        "dispatching {} jobs to {} workers (chunksize {})".format(
            len(items), workers, chunksize
        )
    )
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
