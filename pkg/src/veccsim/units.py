"""Unit conversions between configuration-file units and the internal SI system.

Internally everything is SI: bits, CPU cycles, seconds, joules, watts, hertz.
Configuration files use the units customary for LTE experiment tables
(kB, Megacycles, GHz, MHz, mW, dBm); these helpers convert at ingestion.
Kilobytes are decimal: 1 kB = 8000 bits.
"""

import math

BITS_PER_KB = 8000.0
CYCLES_PER_MEGACYCLE = 1.0e6
HZ_PER_GHZ = 1.0e9
HZ_PER_MHZ = 1.0e6


def kb_to_bits(kb: float) -> float:
    return kb * BITS_PER_KB


def bits_to_kb(bits: float) -> float:
    return bits / BITS_PER_KB


def megacycles_to_cycles(mc: float) -> float:
    return mc * CYCLES_PER_MEGACYCLE


def cycles_to_megacycles(cycles: float) -> float:
    return cycles / CYCLES_PER_MEGACYCLE


def ghz_to_hz(ghz: float) -> float:
    return ghz * HZ_PER_GHZ


def hz_to_ghz(hz: float) -> float:
    return hz / HZ_PER_GHZ


def mhz_to_hz(mhz: float) -> float:
    return mhz * HZ_PER_MHZ


def mw_to_w(mw: float) -> float:
    return mw / 1000.0


def w_to_mw(w: float) -> float:
    return w * 1000.0


def dbm_to_w(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


def w_to_dbm(w: float) -> float:
    if w <= 0:
        raise ValueError("power must be positive to express in dBm")
    return 10.0 * math.log10(w) + 30.0


def joule_per_megacycle_to_per_cycle(j_per_mc: float) -> float:
    return j_per_mc / CYCLES_PER_MEGACYCLE
