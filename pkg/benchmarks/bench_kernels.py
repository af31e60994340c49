"""Time the LSTM recurrence kernels: numba against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--steps 16] [--batch 64] [--hidden 32] [--repeat 50]

Also times one training step end to end under whichever backend
``HARDALIGN_DISABLE_NUMBA`` selects.
"""

import argparse
import timeit

import numpy as np

from hardalign import _accel, kernels


def bench(fn, args, repeat):
    fn(*args)  # warm-up (and JIT compile)
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=16)
    ap.add_argument("--batch", type=int, default=64)
    ap.add_argument("--hidden", type=int, default=32)
    ap.add_argument("--repeat", type=int, default=50)
    a = ap.parse_args()

    rng = np.random.default_rng(0)
    H = a.hidden
    xproj = rng.normal(size=(a.steps, a.batch, 4 * H))
    Wh = rng.normal(scale=0.1, size=(H, 4 * H))
    h0 = np.zeros((a.batch, H))
    c0 = np.zeros((a.batch, H))
    fwd = kernels.lstm_seq_forward_numpy(xproj, Wh, h0, c0)
    dhs = rng.normal(size=(a.steps, a.batch, H))
    bwd_args = (dhs,) + fwd + (Wh, h0, c0)

    print(f"T={a.steps} N={a.batch} H={H}; best of {a.repeat}")
    rows = [("forward", kernels.lstm_seq_forward_numpy, kernels.lstm_seq_forward_numba, (xproj, Wh, h0, c0)),
            ("backward", kernels.lstm_seq_backward_numpy, kernels.lstm_seq_backward_numba, bwd_args)]
    for name, np_fn, nb_fn, args in rows:
        t_np = bench(np_fn, args, a.repeat)
        line = f"{name:9s} numpy {t_np * 1e3:8.3f} ms"
        if _accel.HAS_NUMBA:
            t_nb = bench(nb_fn, args, a.repeat)
            line += f"   numba {t_nb * 1e3:8.3f} ms   speedup {t_np / t_nb:5.2f}x"
        print(line)

    from hardalign.harness.config import RunConfig
    from hardalign.harness.train import Trainer

    trainer = Trainer(RunConfig(record_wallclock=False))
    trainer.step()
    t = min(timeit.repeat(trainer.step, number=1, repeat=10))
    print(f"train step ({'numba' if _accel.USE_NUMBA else 'numpy'} backend) {t * 1e3:8.1f} ms")


if __name__ == "__main__":
    main()
