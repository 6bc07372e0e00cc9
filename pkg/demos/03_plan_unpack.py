"""Solve the unpack problem without any learned gate.

The goal is to move the green box to the other table, but it can only be
picked from above (the domain file allows only the pz direction) and two
taller boxes flank it. The symbolic layer alone would happily propose the
2-step plan "pick green, place green" -- the geometric layer rejects it and
explains the failure, and the loop deepens until the 6-step relocation
appears.

    python3 demos/03_plan_unpack.py
"""

import tampkit
from tampkit import pddl, tamp, world
from tampkit.planner import ground
from tampkit.tamp import TampOptions


def main() -> None:
    domain = pddl.parse_domain(tampkit.fixture_path("pickplace_top.pddl").read_text())
    problem = pddl.parse_problem(tampkit.fixture_path("unpack.problem").read_text(), domain)
    scene = world.parse_scene(tampkit.fixture_path("unpack.scene").read_text())
    print(f"goal: {problem.goal[0].predicate}{problem.goal[0].args}")

    options = TampOptions(step=0.1, seed=0)
    result = tamp.solve(domain, problem, scene, options)
    print(f"\nstatus: {result.status}")
    print("plan:")
    for k, action in enumerate(result.plan.actions):
        print(f"  {k}: {action}")

    m = result.metrics
    print(f"\nthe loop proposed {m.n_task_plans} candidate task plans;")
    print(f"all {m.n_mp_calls} went to the motion planner (no gate),")
    print(f"search finished at horizon {m.final_horizon} in {m.t_total:.2f} s")
    print(f"  symbolic search {m.t_task:.2f} s, motion planning {m.t_mp:.2f} s")

    universe = ground(domain, problem, scene, options.step)
    ok = tamp.replay_validate(scene, universe, result)
    print(f"\nindependent replay of the plan and all motion segments: {'valid' if ok else 'INVALID'}")
    n_waypoints = sum(len(motion.waypoints) for motion in result.motions)
    print(f"({len(result.motions)} collision-checked gripper trajectories, {n_waypoints} waypoints)")


if __name__ == "__main__":
    main()
