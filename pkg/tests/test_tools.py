"""Tests for the tool functions and their MCP registration."""

import json

import pytest
from fastmcp import Client
from fastmcp.exceptions import ToolError

from digitsum_crunchtools.errors import (
    InvalidRangeError,
    UnknownFunctionError,
    UserError,
    ValidationError,
)
from digitsum_crunchtools.tools import (
    build_range,
    evaluate,
    plot_samples,
    sharpness,
    tableau,
    theorems,
    verify,
)
from tests.conftest import A5_ROWS

SERVER_TOOLS = {
    "digitsum_eval_tool",
    "digitsum_theorems_tool",
    "digitsum_verify_tool",
    "digitsum_tableau_tool",
    "digitsum_sharpness_tool",
    "digitsum_plot_tool",
}


class TestToolRegistration:
    """Tests to verify all tools are properly registered."""

    def test_tool_count(self) -> None:
        """The tools package exports ten names."""
        from digitsum_crunchtools.tools import __all__

        assert len(__all__) == 10

    def test_imports(self) -> None:
        """Every exported function is callable."""
        import digitsum_crunchtools.tools as tools_mod
        from digitsum_crunchtools.tools import __all__

        for name in __all__:
            if name.isupper():
                continue
            assert callable(getattr(tools_mod, name)), f"{name} is not callable"

    async def test_server_lists_tools(self) -> None:
        """The MCP server registers one tool per operation."""
        from digitsum_crunchtools.server import mcp

        async with Client(mcp) as client:
            tools = await client.list_tools()
        assert {t.name for t in tools} == SERVER_TOOLS


class TestEvaluateTool:
    """Tests for evaluate()."""

    def test_exact(self) -> None:
        """Integer functions return exact strings."""
        result = evaluate("S", 2, n=8)
        assert result == {
            "function": "S",
            "base": 2,
            "inputs": {"n": 8},
            "value": "12",
            "exact": True,
        }

    def test_truncated(self) -> None:
        """Non-grid points carry a bound and depth."""
        result = evaluate("omega", 2, x="1/3", depth=12)
        assert result["exact"] is False
        assert result["depth"] == 12
        assert "error_bound" in result

    def test_grid_point_is_exact(self) -> None:
        """h at a dyadic point is exact whatever the depth."""
        result = evaluate("h", 2, x="3/8", depth=2)
        assert result["exact"] is True
        assert "error_bound" not in result

    def test_slack(self) -> None:
        """Slack functions reduce to the integer slack on the grid."""
        result = evaluate("lev", m=1, k=1, l=0, level=1)
        assert result["value"] == "1/3"
        assert result["holds"] is True
        assert evaluate("ternary", k=1, l=0, m=1)["value"] == "1"

    def test_times_b_average(self) -> None:
        """times-b carries the average slack for k >= 1."""
        result = evaluate("times-b", 3, n=0, k=1)
        assert result["average_slack"] == "0"
        assert result["equality"] is True

    def test_unknown_function(self) -> None:
        """Unknown names raise UnknownFunctionError."""
        with pytest.raises(UnknownFunctionError):
            evaluate("zeta")

    def test_missing_argument(self) -> None:
        """Missing inputs are reported by flag."""
        with pytest.raises(ValidationError, match="--x"):
            evaluate("g", 3)


class TestVerifyTool:
    """Tests for verify(), theorems() and build_range()."""

    def test_theorems(self) -> None:
        """All seven ids are listed with their fixed bases."""
        listed = {t["theorem_id"]: t for t in theorems()["theorems"]}
        assert set(listed) == {
            "superadditivity",
            "ternary",
            "general_bound",
            "general_bound_average",
            "times_b",
            "approx_convexity_h",
            "lev",
        }
        assert listed["ternary"]["fixed_base"] == 3
        assert listed["general_bound"]["fixed_base"] is None
        assert listed["times_b"]["required"] == ["max_n", "max_k"]

    def test_verify(self) -> None:
        """Reports are JSON-ready and carry passed."""
        result = verify("general_bound", base=2, max_m=10, witness_cap=2)
        assert result["passed"] is True
        assert result["checked"] == 66
        assert result["min_slack"]["slack"] == "0"
        assert len(result["equality_witnesses"]) == 2
        json.dumps(result)

    def test_build_range_rejects_negative(self) -> None:
        """Negative bounds become InvalidRangeError."""
        with pytest.raises(InvalidRangeError, match="max_m"):
            build_range(max_m=-1)


class TestOtherTools:
    """Tests for tableau(), sharpness() and plot_samples()."""

    def test_tableau(self) -> None:
        """The reference tableau verifies."""
        result = tableau(3, 5)
        assert result["rows"] == A5_ROWS
        assert result["passed"] is True
        assert result["report"]["violations"] == []

    def test_sharpness_even(self) -> None:
        """Even bases reach the limit at every n."""
        result = sharpness(2, 3)
        assert result["limit"] == "1"
        assert all(row["deficit"] == "0" and row["matches"] for row in result["rows"])

    def test_sharpness_rejects_zero(self) -> None:
        """max_n must be positive."""
        with pytest.raises(ValidationError):
            sharpness(3, 0)

    def test_plot(self) -> None:
        """h_2 at level 1 is 0, 1/4, 0."""
        result = plot_samples("h", 2, 1)
        assert result["rows"] == [[0, 1, 0, 1], [1, 2, 1, 4], [1, 1, 0, 1]]

    def test_plot_unknown_function(self) -> None:
        """Only h, omega and g can be plotted."""
        with pytest.raises(UnknownFunctionError):
            plot_samples("phi", 2, 1)


class TestServer:
    """Tests calling tools through an in-memory MCP client."""

    async def test_eval(self) -> None:
        """digitsum_eval_tool returns the evaluate() dict."""
        from digitsum_crunchtools.server import mcp

        async with Client(mcp) as client:
            result = await client.call_tool(
                "digitsum_eval_tool", {"function": "s", "base": 10, "n": 1203}
            )
        assert json.loads(result.content[0].text)["value"] == "6"

    async def test_tableau(self) -> None:
        """digitsum_tableau_tool returns the matrix rows."""
        from digitsum_crunchtools.server import mcp

        async with Client(mcp) as client:
            result = await client.call_tool("digitsum_tableau_tool", {"base": 3, "k": 5})
        assert json.loads(result.content[0].text)["rows"] == A5_ROWS

    async def test_user_error(self) -> None:
        """User errors come back as tool errors with their message."""
        from digitsum_crunchtools.server import mcp

        async with Client(mcp) as client:
            with pytest.raises(ToolError, match="Invalid base"):
                await client.call_tool("digitsum_eval_tool", {"function": "s", "base": 1, "n": 3})


class TestErrorHierarchy:
    """All input errors share one base class."""

    def test_user_errors(self) -> None:
        """The CLI catches UserError for every bad input."""
        for error in (InvalidRangeError, UnknownFunctionError, ValidationError):
            assert issubclass(error, UserError)
