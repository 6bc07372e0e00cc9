"""A tour of the geometric layer: scenes, grasp feasibility, and observations.

Builds the canonical "unpack" arrangement -- a short green box squeezed
between two taller boxes -- asks the geometric oracle which of the five
grasp directions work for each body, and renders the depth observation the
classifier would see. Run from the repository root:

    python3 demos/01_scene_and_oracle.py
"""

import pathlib

import tampkit
from tampkit import oracle, render, world
from tampkit.world import GraspDirection

OUT = pathlib.Path(__file__).parent / "out"


def main() -> None:
    scene = world.parse_scene(tampkit.fixture_path("unpack.scene").read_text())
    print("The scene file describes two table regions and three boxes:")
    for r in scene.regions:
        print(f"  region {r.id}: center {tuple(r.center)}, halves ({r.half_x}, {r.half_y})")
    for b in scene.bodies:
        print(f"  body {b.id}: center {tuple(b.center)}, half extents {tuple(b.half_extents)}")

    print("\nThe oracle checks reach, gripper collisions, and table clearance")
    print("for each of the five approach directions (px nx py ny pz):")
    for b in scene.bodies:
        labels = oracle.label_all(scene, b.id)
        marks = " ".join(f"{d.name.lower()}={'yes' if ok else 'no'}"
                         for d, ok in zip(GraspDirection, labels))
        print(f"  {b.id}: {marks}")

    print("\nWhy can't green be picked from above? The oracle can name the culprits:")
    blockers = oracle.pick_blockers(scene, "green", GraspDirection.PZ)
    print(f"  bodies intersecting the top-grasp volume: {sorted(blockers)}")
    print("  (the same sets later become search-pruning constraints for the planner)")

    OUT.mkdir(exist_ok=True)
    obs = render.render_observation(scene, "green")
    for ch, what in ((0, "the target alone"), (1, "everything else")):
        path = OUT / f"green.ch{ch}.pgm"
        path.write_bytes(render.write_pgm(obs, ch))
        print(f"\nwrote {path} ({what}, 100x100 depth image, 5 mm/pixel)")
    print(f"window center feature vector: {obs.feature.tolist()}")


if __name__ == "__main__":
    main()
