from .payload_writer import OutputFormat, render_payload, write_payload

__all__ = ["OutputFormat", "render_payload", "write_payload"]
