"""Learning-rate schedule references.

Two independent forms of the same schedule:

* ``lr_loop`` walks epoch by epoch, applying one multiplicative decay at the
  end of every `every`-epoch window (phase-1 factor up to `phase1` epochs,
  phase-2 factor afterwards).  Multiplications happen in increasing epoch
  order, which pins the exact floating-point result.
* ``lr_closed`` evaluates the closed form with pow().

The two agree to a few ulp; the loop form is the bit-exactness reference.
"""


def lr_loop(epoch, base=5e-4, f1=0.98, f2=0.9, phase1=100, every=2, total=120):
    if not 0 <= epoch < total:
        raise ValueError(f"epoch {epoch} outside [0, {total})")
    lr = base
    for k in range(1, epoch + 1):
        if k % every == 0:
            lr = lr * (f1 if k <= phase1 else f2)
    return lr


def lr_closed(epoch, base=5e-4, f1=0.98, f2=0.9, phase1=100, every=2, total=120):
    if not 0 <= epoch < total:
        raise ValueError(f"epoch {epoch} outside [0, {total})")
    n1 = min(epoch, phase1) // every
    n2 = max(epoch - phase1, 0) // every
    return base * f1 ** n1 * f2 ** n2
