NOT_IMPLEMENTED_MESSAGE = "Must be implemented in child class"


class BaseSweepEngine(object):
    """Evaluates independent samples of a sweep.

    Samples are pure function evaluations with no shared state, so an engine
    is free to run them anywhere as long as results come back in input order.
    """

    @classmethod
    def map(cls, func, items):
        """Apply a function to every item.

        Args:
            func: Picklable callable of one argument.
            items: Sequence of arguments.

        Returns:
            A list of results, ordered as items.
        """
        raise NotImplementedError(NOT_IMPLEMENTED_MESSAGE)
