COMMAND_CATEGORIES = [
    "planeauto.commands.algebra",
    "planeauto.commands.dynamics",
    "planeauto.commands.conjugacy",
]
