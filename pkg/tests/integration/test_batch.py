"""
Integration tests for JSONL batch processing.
"""

import json

import pytest
from typer.testing import CliRunner

from src.cli import BatchRecord, app, get_handler_registry, run_batch
from src.cli.handlers import json_int, parse_number


T_STAR = {"p": 5, "f": 7, "h": 4865171564, "gamma": 58923, "gamma_prime": 77258}


def record(request: str, **overrides) -> str:
    return json.dumps({**T_STAR, **overrides, "request": request})


@pytest.mark.integration
class TestRunBatch:
    """Test run_batch on in-memory lines."""

    async def test_order_and_results(self):
        lines = [record("count"), record("gene"), record("common"), record("kisin")]
        results = await run_batch(lines, concurrency=2)

        assert len(results) == 4
        assert results[0] == {"count": 20}
        assert results[1]["text"] == "O,A,B,A,AB,O,A/B,A,AB,O,O,B,AB"
        assert len(results[2]["common"]) == 20
        assert results[3]["components"] == [[0, 1, 2], [3], [4], [5, 6]]

    async def test_weights_request(self):
        results = await run_batch([record("weights")])
        assert len(results[0]["weights"]) == 20

    async def test_malformed_line(self):
        results = await run_batch([record("count"), "{not json", "", record("count")])

        assert len(results) == 3
        assert results[1]["line"] == 2
        assert "error" in results[1]
        assert results[2] == {"count": 20}

    async def test_unknown_request(self):
        results = await run_batch([record("dance")])
        assert results[0]["line"] == 1
        assert "request" in results[0]["error"]

    async def test_library_error(self):
        """Test that a determinant mismatch is reported per record."""
        results = await run_batch([record("count", gamma_prime=1)])
        assert results[0]["line"] == 1
        assert "error" in results[0]

    async def test_digit_strings(self):
        results = await run_batch([record("count", p=5, f=2, h="0,0,2,3", gamma=0, gamma_prime=[1, 2])])
        assert "count" in results[0]

    async def test_concurrency_from_config(self, monkeypatch):
        monkeypatch.setenv("SERRE_ENUMERATION__BATCH_CONCURRENCY", "1")
        results = await run_batch([record("count")] * 3)
        assert results == [{"count": 20}] * 3


class TestHandlers:
    """Test the request registry and helpers."""

    def test_registry(self):
        registry = get_handler_registry()
        assert registry is get_handler_registry()
        assert set(registry.list_names()) == {"gene", "count", "weights", "common", "kisin"}
        with pytest.raises(ValueError):
            registry.register(registry.get("gene"))

    def test_record_validation(self):
        with pytest.raises(Exception):
            BatchRecord.model_validate({**T_STAR, "request": "sing"})
        with pytest.raises(Exception):
            BatchRecord.model_validate({**T_STAR, "f": 1, "request": "gene"})

    def test_numbers(self):
        assert parse_number("12") == 12
        assert parse_number("[1, 2]") == [1, 2]
        assert parse_number([3, 4]) == [3, 4]
        assert json_int(2 ** 60) == str(2 ** 60)
        assert json_int(5) == 5


@pytest.mark.integration
def test_batch_command(tmp_path):
    path = tmp_path / "requests.jsonl"
    path.write_text("\n".join([record("count"), "oops"]) + "\n")

    result = CliRunner().invoke(app, ["batch", str(path), "--concurrency", "2"])

    assert result.exit_code == 0, result.output
    out = [json.loads(ln) for ln in result.stdout.splitlines() if ln.startswith("{")]
    assert out[0] == {"count": 20}
    assert out[1]["line"] == 2
