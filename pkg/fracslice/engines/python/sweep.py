from fracslice.engines.base.sweep import BaseSweepEngine


class PythonSweepEngine(BaseSweepEngine):
    """Runs every sample in the calling thread."""

    @classmethod
    def map(cls, func, items):
        return [func(item) for item in items]
