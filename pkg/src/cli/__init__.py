from .cli import parse, execute, render, main
