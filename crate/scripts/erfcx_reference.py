"""High-precision reference values for the scaled complementary error function.

erfcx(z) = exp(z^2) * erfc(z), evaluated with mpmath at 40 significant digits.
The output is pasted into crates/core/src/special.rs tests.
"""
import mpmath as mp

mp.mp.dps = 40

POINTS = [
    0.0 + 0.0j,
    0.5 + 0.0j,
    1.0 + 1.0j,
    2.0 - 3.0j,
    0.1 + 5.0j,
    3.0 + 10.0j,
    0.0 + 20.0j,
    6.5 - 0.5j,
    0.0 + 6.9j,
    0.0 - 7.1j,
    4.4 + 0.1j,
    10.0 + 25.0j,
    0.0 + 0.01j,
    5.5 + 5.5j,
]

for z in POINTS:
    zz = mp.mpc(z.real, z.imag)
    v = mp.exp(zz * zz) * mp.erfc(zz)
    print(
        f"    ({z.real!r}, {z.imag!r}, {mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}),"
        
    )
