"""Exception types shared across the package."""


class InputError(ValueError):
    """The caller supplied data outside the supported domain.

    Examples: non-finite coordinates, an empty polygon, unparseable text.
    """


class InternalError(AssertionError):
    """A state the algorithm guarantees unreachable was reached.

    This always indicates a bug in pinpoly itself, never bad user input,
    which is why it is raised as a distinct type instead of being silently
    absorbed into a wrong answer.
    """
