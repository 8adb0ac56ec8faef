"""
Exception hierarchy for the toolkit.

Library code raises these; CLI commands catch ToolkitError and turn it into
exit code 2 (usage error). Each class corresponds to one error kind of the
engines ("invalid-position", "not-gnf", ...), exposed as the `kind` attribute
so reports can name the error the way the documentation does.
"""


class ToolkitError(Exception):
    """Base class for every error the toolkit raises on purpose."""

    kind = 'toolkit-error'


class InvalidSymbolError(ToolkitError):
    kind = 'invalid-symbol'


class InvalidPositionError(ToolkitError):
    kind = 'invalid-position'


class AlphabetMismatchError(ToolkitError):
    kind = 'alphabet-mismatch'


class MachineDefinitionError(ToolkitError):
    """A machine or rewriting system violates its structural invariants."""

    kind = 'invalid-machine'


class GrammarError(ToolkitError):
    """
    A grammar failed validation.

    Attributes:
        rule_index: 0-based index of the first offending rule, or None when
                    the problem is not tied to a single rule.
    """

    kind = 'invalid-grammar'

    def __init__(self, message, rule_index=None):
        super().__init__(message)
        self.rule_index = rule_index


class NotGnfError(GrammarError):
    kind = 'not-gnf'


class UnknownSymbolError(GrammarError):
    kind = 'unknown-symbol'


class EmptyRuleSetError(GrammarError):
    kind = 'empty-rule-set'


class NotDerivableError(ToolkitError):
    kind = 'not-derivable'


class EmptyInputError(ToolkitError):
    kind = 'empty-input'


class NotApplicableError(ToolkitError):
    kind = 'not-applicable'


class InvalidParametersError(ToolkitError):
    kind = 'invalid-parameters'


class UnknownSuiteError(ToolkitError):
    kind = 'unknown-suite'


class UnsupportedMachineError(ToolkitError):
    """The requested operation does not exist for this kind of machine."""

    kind = 'unsupported-machine'


class FormatError(ToolkitError):
    """
    A text file could not be parsed.

    Attributes:
        line: 1-based line number of the offending line (None for whole-file problems).
    """

    kind = 'parse-error'

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
