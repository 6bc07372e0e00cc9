"""Train a small feasibility classifier end to end (a few minutes on one core).

Generates a few thousand labeled scenes with the oracle, trains the CNN for
two epochs, and reports held-out accuracy and error rates. The full-size
recipe (120k samples, up to 10 epochs) lives in the README; this is the
same pipeline at a size you can watch run.

    python3 demos/02_train_small_classifier.py
"""

import pathlib

from tampkit import dataset, nn

OUT = pathlib.Path(__file__).parent / "out"
N_SAMPLES = 4000


def main() -> None:
    OUT.mkdir(exist_ok=True)
    data_path = OUT / "demo.nfcd"
    if not data_path.exists():
        print(f"generating {N_SAMPLES} labeled scenes (oracle-labeled, seed 0)...")
        dataset.generate(N_SAMPLES, seed=0, path=data_path)
    ds = dataset.load_dataset(data_path)
    st = dataset.stats(ds)
    print(f"dataset: {st.n} samples, {st.overall_feasible_rate:.1%} of labels feasible")
    print("per direction:", " ".join(f"{r:.2f}" for r in st.per_direction_rates))

    train_set, val_set = dataset.split(ds, 0.9, seed=0)
    print(f"\ntraining on {len(train_set)}, validating on {len(val_set)}")
    print("(weighted binary cross-entropy: rare feasible labels count more)")
    config = nn.TrainConfig(epochs=2, seed=0)
    model, history = nn.train(train_set.tensors(), val_set.tensors(), config, log=print)

    report = nn.evaluate(model, val_set.tensors())
    print(f"\nheld-out accuracy        {report.accuracy:.1%}")
    print(f"false-feasible rate      {report.false_feasible_rate:.1%}  (claims a blocked grasp works)")
    print(f"false-infeasible rate    {report.false_infeasible_rate:.1%}  (rejects a workable grasp)")

    model_path = OUT / "demo.nfcm"
    nn.save_model(model, model_path)
    print(f"\nwrote {model_path}")


if __name__ == "__main__":
    main()
