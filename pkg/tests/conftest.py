from hypothesis import strategies as st

from multiedge.trees import MultiEdgeTree

SAMPLE_MULTI = "(1:(1:(2:(),1:()),2:(1:())),3:(1:(),1:(2:()),3:()))"
SAMPLE_DARY = "(1:(1:(2:(),3:()),3:(1:())),4:(1:(),2:(2:()),5:()))"


def _node(children):
    return st.lists(st.tuples(st.integers(1, 4), children), max_size=4).map(MultiEdgeTree)


multi_edge_trees = st.recursive(st.just(MultiEdgeTree()), _node, max_leaves=12)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
