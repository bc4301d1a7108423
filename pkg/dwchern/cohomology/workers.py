"""This module runs independent computations in worker threads.

Homomorphism searches, DW sums and candidate checks use it; the results
never depend on the number of threads.
"""

import logging
import threading


logger = logging.getLogger(__name__)


def run_sharded(func, items, threads=1):
    """Return ``[func(x) for x in items]``, computed by *threads* worker
    threads.

    Item ``k`` goes to worker ``k % threads``; the results keep the order
    of *items*. The first exception raised by a worker is re-raised.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(x) for x in items]

    results = [None] * len(items)
    errors = []

    def work(start):
        try:
            for k in range(start, len(items), threads):
                results[k] = func(items[k])
        except Exception as error:
            errors.append(error)

    workers = [threading.Thread(target=work, args=[t], daemon=True)
               for t in range(min(threads, len(items)))]
    logger.debug('%d items on %d worker threads', len(items), len(workers))
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()
    if errors:
        raise errors[0]
    return results
