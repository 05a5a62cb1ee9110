class Singleton(object):
    """Base for objects that hold process-wide state, one instance per subclass.

    Subclasses guard their __init__ with `if not super().created:` so the
    attributes are set only the first time the instance is built.
    """
    __instances = {}

    def __new__(cls, *args, **kwargs):
        if cls not in Singleton.__instances:
            Singleton.__instances[cls] = object.__new__(cls)
        return Singleton.__instances[cls]

    @property
    def created(self) -> bool:
        if getattr(self, '_Singleton__initialized', False):
            return True
        self.__initialized = True
        return False
