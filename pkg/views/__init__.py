from .render import has_failures, render_json, render_lines, render_summary, to_plain

__all__ = ['has_failures', 'render_json', 'render_lines', 'render_summary', 'to_plain']
