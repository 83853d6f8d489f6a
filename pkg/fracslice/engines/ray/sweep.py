from fracslice.engines.base.sweep import BaseSweepEngine
from fracslice import __execution_engine__

if __execution_engine__ == "Ray":
    import ray
    from ray.exceptions import RayTaskError

    from .utils import handle_ray_task_error, initialize_ray

    @ray.remote
    def deploy_ray_func(func, item):
        return func(item)


class RaySweepEngine(BaseSweepEngine):
    """Runs each sample as a Ray task."""

    @classmethod
    def map(cls, func, items):
        initialize_ray()
        refs = [deploy_ray_func.remote(func, item) for item in items]
        try:
            return ray.get(refs)
        except RayTaskError as e:
            handle_ray_task_error(e)
