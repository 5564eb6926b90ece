"""Independent fate table for pull-down decisions.

This evaluator is intentionally dumb: it is a direct transcription of the
rule table into nested conditionals, with no shared code with the flattener.
The exhaustive tests drive both against generated two-class hierarchies and
demand exact agreement.

Inputs are plain booleans describing one superclass member:
  visible     -- declared with any accessibility except private
  overridden  -- a subclass member collides (same attribute name, or same
                 method signature) AND the pairing is legal (no static
                 mismatch, superclass member not final)
  accessed    -- for attributes: read or written by at least one pulled-down
                 accessor; for methods: reachable through call edges starting
                 from the visible superclass methods
"""

from __future__ import annotations


def expected_attribute_fate(visible: bool, overridden: bool, accessed: bool) -> tuple[str, str]:
    if overridden:
        if accessed:
            return ("PullDownRenamed", "R4a")
        if visible:
            return ("PullDownRenamed", "R4b")
        return ("DropAnomaly", "R4c")
    if visible:
        return ("PullDown", "R1")
    if accessed:
        return ("PullDown", "R2")
    return ("DropAnomaly", "R3")


def expected_method_fate(visible: bool, overridden: bool, reachable: bool) -> tuple[str, str]:
    if visible:
        if overridden:
            return ("PullDownRenamed", "R6")
        return ("PullDown", "R5")
    if reachable:
        if overridden:
            return ("PullDownRenamed", "R7")
        return ("PullDown", "R7")
    return ("DropAnomaly", "R8")
