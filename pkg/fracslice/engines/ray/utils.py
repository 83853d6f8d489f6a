import builtins
import threading

from fracslice import error_message


def initialize_ray():
    """Start a local Ray instance once, from the main thread."""
    import ray

    if threading.current_thread().name == "MainThread" and not ray.is_initialized():
        ray.init(ignore_reinit_error=True, logging_level=100)


def handle_ray_task_error(e):
    """Re-raise a remote failure as the error type the task raised."""
    for s in e.traceback_str.split("\n")[::-1]:
        if "Error" in s or "Exception" in s:
            name = s.split(":")[0].strip()
            message = "".join(s.split(":")[1:])
            error_type = getattr(error_message, name, None) or getattr(
                builtins, name, None
            )
            if isinstance(error_type, type) and issubclass(error_type, BaseException):
                raise error_type(message)
    raise e
