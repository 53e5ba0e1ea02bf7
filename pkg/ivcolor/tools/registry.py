import importlib
import inspect
import logging
import os
from typing import Any, Callable, Dict

logger = logging.getLogger(__name__)

# helper modules that live next to the commands but are not commands
_NOT_COMMANDS = ['__init__.py', 'registry.py', 'config.py', 'manifest.py', 'common.py']


def discover_tools() -> Dict[str, Callable]:
    """
    Discover the command implementations in the tools directory.

    Each command module must define a top-level function with the same name
    as its file, e.g. ``verify.py`` defines ``verify``.
    """
    tools_dir = os.path.dirname(__file__)
    tools = {}

    for filename in sorted(os.listdir(tools_dir)):
        if filename.endswith('.py') and filename not in _NOT_COMMANDS:
            module_name = filename[:-3]
            try:
                module = importlib.import_module(f'.{module_name}', package='ivcolor.tools')
            except ImportError as e:
                logger.error("❌ Failed to import %s: %s", filename, e)
                continue

            tool_function = getattr(module, module_name, None)
            if tool_function is None:
                logger.warning("⚠️  No function named '%s' found in %s", module_name, filename)
            elif not callable(tool_function):
                logger.warning("⚠️  %s exists but is not callable", module_name)
            else:
                tools[module_name] = tool_function
                logger.debug("✅ Registered tool: %s", module_name)

    return tools


TOOLS = discover_tools()


def dispatch_tool(name: str, **kwargs) -> Any:
    """
    Call the command ``name`` with the keyword arguments it accepts.

    Unknown keywords are dropped with a warning; unknown commands raise
    ``KeyError``.
    """
    if name not in TOOLS:
        raise KeyError(f"unknown command: {name}")

    tool_function = TOOLS[name]
    sig = inspect.signature(tool_function)
    filtered_kwargs = {}
    for param_name, param_value in kwargs.items():
        if param_name in sig.parameters:
            filtered_kwargs[param_name] = param_value
        else:
            logger.warning("⚠️  Parameter '%s' not accepted by %s, ignoring", param_name, name)

    logger.debug("dispatching %s(%s)", name, ", ".join(f"{k}={v!r}" for k, v in filtered_kwargs.items()))
    return tool_function(**filtered_kwargs)
