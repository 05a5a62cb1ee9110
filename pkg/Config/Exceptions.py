from Config.Messages import Messages


class QKDError(Exception):
    def __init__(self, message='', title='', *args: object) -> None:
        self.__message = message
        self.__title = title
        super().__init__(message, *args)

    @property
    def message(self) -> str:
        return self.__message

    @property
    def title(self) -> str:
        return self.__title

    def __str__(self) -> str:
        if self.__title:
            return f'{self.__title}: {self.__message}'
        return self.__message


class DomainError(QKDError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().DOMAIN_ERROR_TITLE
        super().__init__(message, title, *args)


class NumericalError(QKDError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().NUMERICAL_ERROR_TITLE
        super().__init__(message, title, *args)


class SingularMoments(NumericalError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().SINGULAR_MOMENTS_TITLE
        super().__init__(message, title, *args)


class DegenerateInput(DomainError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().DEGENERATE_INPUT_TITLE
        super().__init__(message, title, *args)


class UsageError(QKDError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().USAGE_ERROR_TITLE
        super().__init__(message, title, *args)


class BlockTooSmall(DomainError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().BLOCK_TOO_SMALL_TITLE
        super().__init__(message, title, *args)


class EmptySupport(DomainError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().EMPTY_SUPPORT_TITLE
        super().__init__(message, title, *args)


class InfeasibleBudget(DomainError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().INFEASIBLE_BUDGET_TITLE
        super().__init__(message, title, *args)


class ConfigError(QKDError):
    def __init__(self, message='', title='', *args: object) -> None:
        if title == '':
            title = Messages().CONFIG_ERROR_TITLE
        super().__init__(message, title, *args)
