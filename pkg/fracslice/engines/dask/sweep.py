from fracslice.engines.base.sweep import BaseSweepEngine
from fracslice import __execution_engine__

if __execution_engine__ == "Dask":
    from distributed.client import _get_global_client


def get_client():
    client = _get_global_client()
    if client is None:
        from distributed import Client

        client = Client()
    return client


class DaskSweepEngine(BaseSweepEngine):
    """Submits samples as futures on the global distributed client."""

    @classmethod
    def map(cls, func, items):
        items = list(items)
        if not items:
            return []
        client = get_client()
        futures = client.map(func, items, pure=False)
        return client.gather(futures)
