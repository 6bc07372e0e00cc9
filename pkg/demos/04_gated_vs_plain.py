"""Compare ungated planning with classifier-gated planning on the unpack task.

With the gate, every candidate task plan is first scored by the trained
classifier; plans containing a step it considers infeasible are rejected
before any motion planning runs. On the unpack arrangement this skips the
many doomed "just grab green" candidates and saves most of the motion
planning time.

Needs a trained model. Point TAMPKIT_MODEL at one, or train the full-size
model first (see README); falls back to artifacts/nfc120k.nfcm.

    python3 demos/04_gated_vs_plain.py
"""

import os
import pathlib
import sys

import tampkit
from tampkit import nn, pddl, tamp, world
from tampkit.tamp import TampOptions

REPO = pathlib.Path(__file__).resolve().parent.parent
MODEL = os.environ.get("TAMPKIT_MODEL", str(REPO / "artifacts" / "nfc120k.nfcm"))


def run(label: str, options: TampOptions, domain, problem, scene):
    result = tamp.solve(domain, problem, scene, options)
    m = result.metrics
    print(f"{label:>6}: {result.status}, {m.n_task_plans} task plans, "
          f"{m.n_nfc_rejections} gate rejections, {m.n_mp_calls} motion-planner calls, "
          f"motion time {m.t_mp * 1000:.0f} ms, total {m.t_total * 1000:.0f} ms")
    return result


def main() -> None:
    if not pathlib.Path(MODEL).exists():
        sys.exit(f"no model at {MODEL}; train one first (see README) or set TAMPKIT_MODEL")
    model = nn.load_model(MODEL)
    domain = pddl.parse_domain(tampkit.fixture_path("pickplace_top.pddl").read_text())
    problem = pddl.parse_problem(tampkit.fixture_path("unpack.problem").read_text(), domain)
    scene = world.parse_scene(tampkit.fixture_path("unpack.scene").read_text())

    step = 0.06
    print(f"placement grid step {step} m; both runs use the same RRT seeds\n")
    plain = run("plain", TampOptions(step=step, seed=0), domain, problem, scene)
    gated = run("gated", TampOptions(step=step, seed=0, use_nfc=True, model=model),
                domain, problem, scene)

    if plain.status == gated.status == "solved":
        saved = 1.0 - gated.metrics.t_mp / max(plain.metrics.t_mp, 1e-9)
        calls = f"{plain.metrics.n_mp_calls} -> {gated.metrics.n_mp_calls}"
        print(f"\nmotion planning problems per scene: {calls}")
        print(f"motion planning time saved by the gate: {saved:.0%}")
        print("\na rejected candidate costs the gate under a millisecond per action;")
        print("the same candidate costs the plain run a full motion-planner budget,")
        print("so the gate can even afford to look at a few extra candidates and win.")


if __name__ == "__main__":
    main()
