# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.


class HitsetBaseException(Exception):
    pass


class HitsetError(HitsetBaseException):
    pass


class HitsetConfigError(HitsetError):
    pass


class HitsetValidationError(HitsetError):
    """An instance violates the general position or model invariants.

    The offending `ValidationReport` is available as ``report``.
    """

    def __init__(self, report):
        self.report = report
        lines = [str(v) for v in report.violations[:5]]
        if len(report.violations) > 5:
            lines.append("... and %d more" % (len(report.violations) - 5))
        super().__init__("invalid instance:\n  " + "\n  ".join(lines))


class HitsetDegeneracyError(HitsetError):
    pass


class HitsetFormatError(HitsetError):
    pass


class HitsetInvariantError(HitsetError):
    pass


class HitsetWarning(UserWarning):
    pass
