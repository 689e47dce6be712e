"""
    CLI Tests

    Description:
    - Checks the ballvolume command and its HTTP mirror: output records,
    formats, precision and exit codes.

"""

# Importing Python Packages
import inspect
import json
import math
import pytest

# Importing FastAPI Packages
from fastapi import status
from fastapi.routing import APIRoute

# Importing Project Files
from apps.cli.command import main
from apps.cli.route import router as cli_router
from apps.cli.view import grid


# -----------------------------------------------------------------------------


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()

    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("eval", "V", "--x", "2"), math.pi),
        (("eval", "R", "--x", "2", "--r", "1"), math.pi),
        (("eval", "T", "--x", "2", "--r", "1"), math.pi / 2.0),
        (("eval", "B", "--x", "3"), 4.0 * math.pi / 3.0),
        (("eval", "gaussian", "--x", "6"), math.pi**3),
        (("eval", "sublevel", "--x", "2", "--b", "4"), 4.0 * math.pi),
        (("eval", "S", "--x", "3"), 4.0 * math.pi),
    ],
)
def test_eval_json(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    record = json.loads(out)

    assert code == 0
    assert record["target"] == argv[1]
    assert record["method"] == "closed_form"
    assert record["error_estimate"] == 0.0
    assert record["value"] == pytest.approx(expected, rel=1e-13)


def test_eval_record_layout(capsys):
    _, out, err = run(capsys, "eval", "R", "--x", "2", "--r", "1")

    assert list(json.loads(out)) == [
        "target",
        "inputs",
        "value",
        "method",
        "error_estimate",
    ]
    assert json.loads(out)["inputs"] == {"x": 2.0, "r": 1.0}
    assert out.endswith("\n")
    assert err == ""


def test_eval_coboundary_residual(capsys):
    code, out, _ = run(
        capsys, "eval", "coboundary", "--x", "2.5", "--r", "1.5"
    )

    assert code == 0
    assert abs(json.loads(out)["value"]) <= 1e-11 * (1.0 + 5.5 / 2.5)


@pytest.mark.parametrize("precision, digits", [(3, 3.14), (17, math.pi)])
def test_eval_precision(capsys, precision, digits):
    _, out, _ = run(
        capsys, "eval", "V", "--x", "2", "--precision", str(precision)
    )

    assert json.loads(out)["value"] == digits


def test_eval_csv(capsys):
    code, out, _ = run(capsys, "eval", "V", "--x", "2", "--format", "csv")

    assert code == 0
    assert out == (
        "target,x,r,b,value,method,error_estimate\r\n"
        "V,2.0,,,3.14159265358979,closed_form,0.0\r\n"
    )


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "V", "--x", "0"),
        ("eval", "V", "--x", "-1"),
        ("eval", "R", "--x", "2"),
        ("eval", "T", "--x", "2", "--r", "-1"),
        ("eval", "sublevel", "--x", "2"),
        ("eval", "V", "--x", "2", "--precision", "0"),
        ("eval", "V", "--x", "2", "--precision", "18"),
        ("eval", "W", "--x", "2"),
        ("eval", "V"),
        ("table", "V", "--x-start", "3", "--x-end", "1", "--step", "1"),
        ("table", "V", "--x-start", "1", "--x-end", "3", "--step", "0"),
        ("table", "R", "--x-start", "1", "--x-end", "3", "--step", "1"),
        ("verify", "--suite", "golden_volumes", "--samples", "0"),
        ("verify", "--suite", "unknown"),
        ("verify", "--seed", "-1"),
        ("table", "V", "--x-start", "1", "--x-end", "1e9", "--step", "1"),
    ],
)
def test_invalid_arguments_exit_two(capsys, argv):
    code, out, _ = run(capsys, *argv)

    assert code == 2
    assert out == ""


def test_table_volume(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "V",
        "--x-start",
        "1",
        "--x-end",
        "5",
        "--step",
        "1",
    )
    rows = json.loads(out)

    assert code == 0
    assert [row["x"] for row in rows] == [1.0, 2.0, 3.0, 4.0, 5.0]
    assert rows[1]["value"] == pytest.approx(math.pi, rel=1e-13)
    assert list(rows[0]) == ["x", "value"]


def test_table_degenerate_range(capsys):
    _, out, _ = run(
        capsys,
        "table",
        "T",
        "--x-start",
        "2",
        "--x-end",
        "2",
        "--step",
        "1",
        "--r",
        "1",
    )

    (row,) = json.loads(out)

    assert (row["x"], row["r"]) == (2.0, 1.0)
    assert row["value"] == pytest.approx(math.pi / 2.0, rel=1e-13)


def test_table_cocycle_csv(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "R",
        "--x-start",
        "1",
        "--x-end",
        "2",
        "--step",
        "0.5",
        "--r",
        "1",
        "--format",
        "csv",
    )
    lines = out.split("\r\n")
    middle = math.pi * math.gamma(0.75) / math.gamma(1.75)

    assert code == 0
    assert lines[0] == "x,r,value"
    assert len(lines) == 5 and lines[-1] == ""
    assert float(lines[1].split(",")[2]) == pytest.approx(2.0 * math.pi)
    assert float(lines[2].split(",")[2]) == pytest.approx(middle, rel=1e-13)
    assert float(lines[3].split(",")[2]) == pytest.approx(math.pi)


def test_grid_points():
    assert grid(1.0, 2.0, 0.1) == pytest.approx(
        [1.0 + 0.1 * index for index in range(11)]
    )
    assert len(grid(0.5, 1.9, 0.5)) == 4


def test_verify_golden_volumes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "golden_volumes")
    (report,) = json.loads(out)

    assert code == 0
    assert report["suite"] == "golden_volumes"
    assert report["passed"] is True
    assert report["samples"] == 5
    assert len(report["worst_cases"]) == 5


def test_verify_csv(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "cocycle_T",
        "--samples",
        "20",
        "--seed",
        "5",
        "--format",
        "csv",
    )
    header, row, trailer = out.split("\r\n")

    assert code == 0
    assert header == (
        "suite,samples,seed,tol,max_relative_residual,passed,elapsed_ms"
    )
    assert row.startswith("cocycle_T,20,5,1e-10,")
    assert ",true," in row
    assert trailer == ""


def test_verify_failing_suite_exits_one(capsys):
    code, out, err = run(
        capsys,
        "verify",
        "--suite",
        "cocycle_R",
        "--samples",
        "50",
        "--tol",
        "1e-300",
    )

    assert code == 1
    assert json.loads(out)[0]["passed"] is False
    assert "cocycle_R" in err


def test_verify_is_reproducible(capsys):
    argv = ("verify", "--suite", "coboundary", "--samples", "30")
    first = json.loads(run(capsys, *argv)[1])[0]
    second = json.loads(run(capsys, *argv)[1])[0]

    first.pop("elapsed_ms")
    second.pop("elapsed_ms")

    assert first == second


def test_http_root(client):
    response = client.get("/")

    assert response.status_code == status.HTTP_200_OK


def test_http_eval(client):
    response = client.get("/v1/eval/V", params={"x": 2})

    assert response.status_code == status.HTTP_200_OK
    assert response.json()["value"] == pytest.approx(math.pi, rel=1e-13)


def test_http_table(client):
    response = client.get(
        "/v1/table/T",
        params={"x_start": 1, "x_end": 3, "step": 1, "r": 0.5},
    )

    assert response.status_code == status.HTTP_200_OK
    assert [row["x"] for row in response.json()] == [1.0, 2.0, 3.0]


def test_http_verify(client):
    response = client.get("/v1/verify/golden_volumes")

    assert response.status_code == status.HTTP_200_OK
    assert response.json()[0]["passed"] is True


@pytest.mark.parametrize(
    "path, params",
    [
        ("/v1/eval/V", {"x": 0}),
        ("/v1/eval/R", {"x": 2}),
        ("/v1/eval/W", {"x": 2}),
        ("/v1/verify/unknown", {}),
        ("/v1/verify/cocycle_R", {"samples": 0}),
        ("/v1/verify/cocycle_R", {"samples": 100_001}),
        (
            "/v1/table/V",
            {"x_start": 1, "x_end": 1e6, "step": 1e-3},
        ),
    ],
)
def test_http_invalid_arguments(client, path, params):
    response = client.get(path, params=params)

    assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "V", "--x", "2000"),
        ("eval", "B", "--x", "2000"),
        ("eval", "sublevel", "--x", "2000", "--b", "1"),
        ("eval", "R", "--x", "2", "--r", "600"),
    ],
)
def test_underflow_exits_one(capsys, argv):
    code, out, err = run(capsys, *argv)

    assert code == 1
    assert out == ""
    assert "underflows" in err


def test_eval_gaussian_at_large_dimension(capsys):
    code, out, _ = run(capsys, "eval", "gaussian", "--x", "1200")

    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(
        math.exp(600.0 * math.log(math.pi)), rel=1e-10
    )


def test_http_underflow_is_evaluation_error(client):
    response = client.get("/v1/eval/V", params={"x": 2000})

    assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
    assert "underflows" in response.json()["detail"]


def test_http_routes_are_synchronous():
    handlers = [
        route.endpoint
        for route in cli_router.routes
        if isinstance(route, APIRoute)
    ]

    assert len(handlers) == 3
    assert not any(inspect.iscoroutinefunction(item) for item in handlers)
