import re

_WS = re.compile(r"(?:\s+|#[^\n]*)+")


class ParseError(ValueError):
    """Malformed text input; ``pos`` is a character offset into the source."""

    def __init__(self, message, pos=None):
        self.message = message
        self.pos = pos
        if pos is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} (at position {pos})")


class Scanner:
    """Cursor over a string that skips whitespace and # comments."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        m = _WS.match(self.text, self.pos)
        if m:
            self.pos = m.end()

    def at_end(self):
        self.skip()
        return self.pos >= len(self.text)

    def peek(self, s):
        self.skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s):
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s):
        if not self.accept(s):
            self.error(f"expected {s!r}")

    def match(self, pattern):
        self.skip()
        m = re.compile(pattern).match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group(0)

    def ident(self, what="identifier"):
        tok = self.match(r"[A-Za-z0-9_+'.]+")
        if tok is None:
            self.error(f"expected {what}")
        return tok

    def error(self, message):
        raise ParseError(message, self.pos)
