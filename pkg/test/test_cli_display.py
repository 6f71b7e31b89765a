#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test script for the CLI display functionality.
"""

from tree_ramsey.cli_display import CLIDisplay, get_display, setup_display
from tree_ramsey.config import Settings
from tree_ramsey.semigroup import Word
from tree_ramsey.sets import TreeSet
from tree_ramsey.structures import TreeWitness, identity_tree_witness, verify_arithmetic_subtree


def test_basic_display():
    """Test basic display functionality."""
    print("Testing normal mode...")
    display = CLIDisplay(debug=False, quiet=False)

    display.print_header("🌳 Tree Ramsey", "Testing normal display mode")

    display.info("This is an info message")
    display.success("This is a success message")
    display.warning("This is a warning message")
    display.error("This is an error message")

    display.print_config_info(Settings(node_budget=5000, workers=2))
    display.print_table("Density sequence", ["N", "d_N"], [(1, "1"), (2, "3/4")])


def test_debug_display():
    """Test debug display functionality."""
    print("\nTesting debug mode...")
    display = CLIDisplay(debug=True, quiet=False)

    display.print_header("🔍 Debug Mode Test", "Testing debug display mode")

    display.info("This is an info message in debug mode")
    display.debug("This is a debug message")
    display.print_config_info(Settings())
    display.success("This is a success message in debug mode")


def test_quiet_display(capsys):
    """Test quiet display functionality."""
    display = CLIDisplay(debug=False, quiet=True, no_color=True)

    display.info("This info message should not appear")
    display.success("This success message should not appear")
    display.print_table("Hidden", ["a"], [(1,)])
    display.warning("This warning message should appear")
    display.error("This error message should appear")

    out = capsys.readouterr().out
    assert "should not appear" not in out
    assert "Hidden" not in out
    assert "This warning message should appear" in out
    assert "This error message should appear" in out


def test_verdicts(capsys):
    display = CLIDisplay(no_color=True)
    S = TreeSet.full(2, 2)
    display.print_verdict(verify_arithmetic_subtree(identity_tree_witness(2, 1), S))
    mapping = {Word.parse(2, ""): Word.parse(2, ""), Word.parse(2, "0"): Word.parse(2, "0"),
               Word.parse(2, "1"): Word.parse(2, "01")}
    display.print_verdict(verify_arithmetic_subtree(TreeWitness(2, 1, 1, mapping), S))

    out = capsys.readouterr().out
    assert "PASS" in out
    assert "descent" in out


def test_print_report(capsys):
    report = "density A.txt k=2 n=2 dim=2\nd_1 = 1\nd_2 = [3/4]\n"
    CLIDisplay(no_color=True).print_report(report)
    CLIDisplay(quiet=True, no_color=True).print_report("hidden\n")

    out = capsys.readouterr().out
    assert report in out
    assert "hidden" not in out


def test_search_progress():
    """Test the search spinner."""
    display = CLIDisplay(debug=False, quiet=False)

    with display.create_search_progress("Searching for a tree witness...") as progress:
        progress.update_stage("dense-rows")
        progress.update_custom("Assembling rows", "🧩")

    quiet = CLIDisplay(quiet=True)
    with quiet.create_search_progress() as progress:
        assert progress.status is None
        progress.update_stage("ignored")


def test_file_operations():
    """Test file operation messages."""
    display = CLIDisplay(debug=False, quiet=False)

    display.print_file_saved("/tmp/witness.json", "tree witness")
    display.print_file_saved("/tmp/A.txt", "set")

    display.print_summary(0, "Operation completed successfully")
    display.print_summary(1, "No witness")
    display.print_summary(2)
    display.print_summary(3, "Operation failed due to a parse error")


def test_global_display():
    display = setup_display(quiet=True)
    assert get_display() is display
    assert display.quiet


if __name__ == "__main__":
    test_basic_display()
    test_debug_display()
    test_search_progress()
    test_file_operations()

    print("\n✅ All CLI display tests completed!")
