"""Exception hierarchy shared by all translit modules."""


class TranslitError(Exception):
    """Base class for every error raised by this package."""


# -- script ------------------------------------------------------------------

class ProfileError(TranslitError, ValueError):
    pass


class EmptyWord(TranslitError, ValueError):
    def __init__(self, message="empty word"):
        super().__init__(message)


class NonRomanCharacter(TranslitError, ValueError):
    def __init__(self, char, index, word=None):
        self.char = char
        self.index = index
        self.word = word
        super().__init__(
            f"non-Roman character {char!r} (U+{ord(char):04X}) at index {index}"
            + (f" in {word!r}" if word is not None else "")
        )


class NonGurmukhiCharacter(TranslitError, ValueError):
    def __init__(self, char, index, word=None):
        self.char = char
        self.index = index
        self.word = word
        super().__init__(
            f"non-Gurmukhi character {char!r} (U+{ord(char):04X}) at index {index}"
        )


class LeadingCombiningMark(TranslitError, ValueError):
    def __init__(self, char, word=None):
        self.char = char
        self.word = word
        super().__init__(f"combining mark U+{ord(char):04X} has no base character")


# -- corpus ------------------------------------------------------------------

class CorpusError(TranslitError):
    """Problem with a corpus line; carries the 1-based line number when known."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


class MalformedLine(CorpusError):
    pass


class UnknownCategory(CorpusError):
    pass


class EntryValidationError(CorpusError):
    pass


class EmptyTrainingSet(TranslitError):
    pass


class ModelFormatError(TranslitError):
    pass


class UnsupportedVersion(ModelFormatError):
    pass


class CorruptSection(ModelFormatError):
    def __init__(self, section, lineno, reason):
        self.section = section
        self.lineno = lineno
        super().__init__(f"corrupt section [{section}] at line {lineno}: {reason}")


# -- decoder / eval ----------------------------------------------------------

class ModelMissingTable(TranslitError):
    pass


class ZeroTotal(TranslitError, ZeroDivisionError):
    pass


class EmptyTestSet(TranslitError):
    pass
