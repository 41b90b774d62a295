import logging
from typing import Callable

from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.constants import CommandName
from lllocal.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

CommandHandler = Callable[[RunConfig], CommandOutcome]


class CommandRegistry:
    """Registry for CLI command handlers."""

    _commands: dict[CommandName, CommandHandler] = {}

    @classmethod
    def register(cls, name: CommandName, func: CommandHandler):
        cls._commands[name] = func
        logger.debug(f"Registered command: {name.value}")

    @classmethod
    def get(cls, name: CommandName) -> CommandHandler:
        try:
            return cls._commands[name]
        except KeyError:
            raise InvalidInputError(f"Unknown command {name}") from None

    @classmethod
    def names(cls) -> list[str]:
        return sorted(name.value for name in cls._commands)

    @classmethod
    def run(cls, config: RunConfig) -> CommandOutcome:
        return cls.get(config.command)(config)


def command(name: CommandName):
    """
    Decorator to register a command handler.

    Usage:
        @command(name=CommandName.CHECK)
        def cmd_check(config: RunConfig) -> CommandOutcome:
            ...
    """

    def decorator(func: CommandHandler):
        CommandRegistry.register(name, func)
        return func

    return decorator
