"""
Chunked process-pool helpers for census loops.
"""

from concurrent.futures import ProcessPoolExecutor

import numpy as np


def chunk_ranges(total, jobs):
    """
    Split range(total) into at most `jobs` contiguous (start, stop) pieces.

    Args:
        total (int): Number of items.
        jobs (int): Desired number of pieces.

    Returns:
        list: Non-empty (start, stop) pairs covering range(total) in order.
    """
    pieces = max(1, min(jobs, total))
    bounds = np.linspace(0, total, pieces + 1).astype(np.int64)
    return [(int(lo), int(hi)) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


def run_chunks(worker, args, total, jobs=1):
    """
    Run worker(*args, start, stop) over the chunks of range(total).

    Args:
        worker (callable): Module-level function (picklable for the pool).
        args (tuple): Leading arguments for every call.
        total (int): Number of items.
        jobs (int): Worker processes; 1 runs inline.

    Returns:
        list: Worker results in chunk order, whatever the schedule.
    """
    ranges = chunk_ranges(total, jobs)
    if jobs <= 1 or len(ranges) <= 1:
        return [worker(*args, start, stop) for start, stop in ranges]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(worker, *args, start, stop) for start, stop in ranges]
        return [future.result() for future in futures]
