import sys

from fracslice import __execution_engine__ as execution_engine
from fracslice.engines.python.sweep import PythonSweepEngine


class SweepFactory(object):
    """Dispatches sample sweeps to the engine picked by FRACSLICE_ENGINE."""

    @property
    def engine_cls(self):
        """The engine that runs the sweep."""
        raise NotImplementedError("Implement in children classes!")

    @classmethod
    def _determine_engine(cls):
        factory_name = execution_engine + "SweepFactory"
        return getattr(sys.modules[__name__], factory_name)

    @classmethod
    def map(cls, func, items):
        return cls._determine_engine()._map(func, items)

    @classmethod
    def _map(cls, func, items):
        return cls.engine_cls.map(func, list(items))


class PythonSweepFactory(SweepFactory):
    engine_cls = PythonSweepEngine


class DaskSweepFactory(SweepFactory):
    @classmethod
    def _map(cls, func, items):
        from fracslice.engines.dask.sweep import DaskSweepEngine

        return DaskSweepEngine.map(func, list(items))


class RaySweepFactory(SweepFactory):
    @classmethod
    def _map(cls, func, items):
        from fracslice.engines.ray.sweep import RaySweepEngine

        return RaySweepEngine.map(func, list(items))
