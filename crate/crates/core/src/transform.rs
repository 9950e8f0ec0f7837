//! Additive FFT in the `X̄` basis, `X̄_i = prod_j (s_j(x) / s_j(v_j))^(i_j)`.
//!
//! Coefficient vectors are stored low index first. `fft` on a block of
//! length `2^tau` shifted by `omega_b` leaves `f(omega_{b + i})` at index `i`.

use alloc::vec::Vec;

use crate::algebra::CodeAlgebra;
use crate::basis::EvalBasis;
use crate::error::{Error, Result};

fn check_block<E>(basis: &EvalBasis<E>, len: usize, tau: u32, b: usize) -> Result<()> {
    if len != 1 << tau {
        return Err(Error::LengthMismatch { what: "transform input", expected: 1 << tau, actual: len });
    }
    if tau > basis.m() {
        return Err(Error::OutOfRange { what: "tau", value: tau as usize, bound: basis.m() as usize + 1 });
    }
    if b & ((1 << tau) - 1) != 0 || b >> basis.m() != 0 {
        return Err(Error::OutOfRange { what: "block shift", value: b, bound: 1 << basis.m() });
    }
    Ok(())
}

fn butterflies<A: CodeAlgebra>(
    alg: &A,
    data: &mut [A::Elem],
    tau: u32,
    inverse: bool,
    twiddle: impl Fn(u32, usize) -> A::Elem,
    xors: &mut u64,
) {
    for step in 0..tau {
        let level = if inverse { step + 1 } else { tau - step };
        let half = 1usize << (level - 1);
        for o in (0..data.len()).step_by(2 * half) {
            let c = twiddle(level, o);
            let skip = alg.is_zero(c);
            for i in o..o + half {
                if inverse {
                    let (a0, a1) = (data[i], data[i + half]);
                    let hi = alg.add(a0, a1, xors);
                    data[i] = if skip { a0 } else { alg.add(a0, alg.mul_prepared(c, hi, xors), xors) };
                    data[i + half] = hi;
                } else {
                    let (lo, hi) = (data[i], data[i + half]);
                    let a0 = if skip { lo } else { alg.add(lo, alg.mul_prepared(c, hi, xors), xors) };
                    data[i] = a0;
                    data[i + half] = alg.add(a0, hi, xors);
                }
            }
        }
    }
}

/// Evaluates `f = sum data[i] X̄_i` at `omega_b .. omega_{b + 2^tau - 1}` in place.
/// `b` must be a multiple of `2^tau`.
pub fn fft<A: CodeAlgebra>(
    alg: &A,
    basis: &EvalBasis<A::Elem>,
    data: &mut [A::Elem],
    tau: u32,
    b: usize,
    xors: &mut u64,
) -> Result<()> {
    check_block(basis, data.len(), tau, b)?;
    let tw = basis.twiddles();
    butterflies(alg, data, tau, false, |level, o| tw.get(level, b | o), xors);
    Ok(())
}

/// Inverse of [`fft`].
pub fn ifft<A: CodeAlgebra>(
    alg: &A,
    basis: &EvalBasis<A::Elem>,
    data: &mut [A::Elem],
    tau: u32,
    b: usize,
    xors: &mut u64,
) -> Result<()> {
    check_block(basis, data.len(), tau, b)?;
    let tw = basis.twiddles();
    butterflies(alg, data, tau, true, |level, o| tw.get(level, b | o), xors);
    Ok(())
}

/// [`fft`] at `beta + omega_0 .. beta + omega_{2^tau - 1}` for an arbitrary
/// shift. Twiddles are derived from `beta` on the fly and not charged.
pub fn fft_shifted<A: CodeAlgebra>(
    alg: &A,
    basis: &EvalBasis<A::Elem>,
    data: &mut [A::Elem],
    tau: u32,
    beta: A::Elem,
    xors: &mut u64,
) -> Result<()> {
    check_block(basis, data.len(), tau, 0)?;
    let tw = |level, o| basis.twiddle_for(alg, level, alg.add_raw(beta, basis.omega_unchecked(o)));
    butterflies(alg, data, tau, false, tw, xors);
    Ok(())
}

/// Inverse of [`fft_shifted`].
pub fn ifft_shifted<A: CodeAlgebra>(
    alg: &A,
    basis: &EvalBasis<A::Elem>,
    data: &mut [A::Elem],
    tau: u32,
    beta: A::Elem,
    xors: &mut u64,
) -> Result<()> {
    check_block(basis, data.len(), tau, 0)?;
    let tw = |level, o| basis.twiddle_for(alg, level, alg.add_raw(beta, basis.omega_unchecked(o)));
    butterflies(alg, data, tau, true, tw, xors);
    Ok(())
}

/// `f(omega_l)` for `f` of any length up to `2^m`, folding one level at a time.
pub fn eval_point<A: CodeAlgebra>(
    alg: &A,
    basis: &EvalBasis<A::Elem>,
    coeffs: &[A::Elem],
    l: usize,
    xors: &mut u64,
) -> Result<A::Elem> {
    if coeffs.is_empty() {
        return Ok(alg.zero());
    }
    let tau = coeffs.len().next_power_of_two().trailing_zeros();
    if tau > basis.m() || l >> basis.m() != 0 {
        return Err(Error::OutOfRange { what: "evaluation index", value: l, bound: 1 << basis.m() });
    }
    let mut buf: Vec<A::Elem> = coeffs.to_vec();
    let mut len = buf.len();
    let tw = basis.twiddles();
    for level in (1..=tau).rev() {
        let half = 1usize << (level - 1);
        let c = tw.get(level, l);
        if !alg.is_zero(c) {
            for i in 0..half {
                if half + i < len {
                    let t = alg.mul_prepared(c, buf[half + i], xors);
                    buf[i] = alg.add(buf[i], t, xors);
                }
            }
        }
        len = len.min(half);
    }
    Ok(buf[0])
}

/// Interpolates `2^tau + 1` values at `omega_0 .. omega_{2^tau}` to the
/// `2^tau + 1` coordinates of the unique polynomial of `X̄`-degree `<= 2^tau`.
///
/// `X̄_{2^tau}` vanishes on `omega_0 .. omega_{2^tau - 1}` and is 1 at
/// `omega_{2^tau}`, so its coefficient is what the low part misses there.
pub fn extended_ifft<A: CodeAlgebra>(
    alg: &A,
    basis: &EvalBasis<A::Elem>,
    values: &[A::Elem],
    tau: u32,
    xors: &mut u64,
) -> Result<Vec<A::Elem>> {
    let n = 1usize << tau;
    if values.len() != n + 1 {
        return Err(Error::LengthMismatch { what: "extended IFFT input", expected: n + 1, actual: values.len() });
    }
    if tau >= basis.m() {
        return Err(Error::OutOfRange { what: "tau", value: tau as usize, bound: basis.m() as usize });
    }
    let mut out: Vec<A::Elem> = values[..n].to_vec();
    ifft(alg, basis, &mut out, tau, 0, xors)?;
    let at_top = eval_point(alg, basis, &out, n, xors)?;
    out.push(alg.add(values[n], at_top, xors));
    Ok(out)
}

/// `s_j'(x) / s_j(v_j)` for `j < m`: the linear coefficient of the
/// normalized subspace polynomial, `prod_{k<j} s_k(v_k) / s_j(v_j)`.
pub fn derivative_constants<A: CodeAlgebra>(alg: &A, basis: &EvalBasis<A::Elem>) -> Vec<A::Elem> {
    let mut out = Vec::with_capacity(basis.m() as usize);
    let mut prod = alg.one();
    for j in 0..basis.m() {
        out.push(alg.prepare(alg.canonical(alg.mul_raw(prod, basis.s_norm_inv(j)))));
        prod = alg.mul_raw(prod, basis.s_norm(j));
    }
    out
}

/// `X̄` coordinates of `f'`. Since `X̄_a' = sum_{j in a} c_j X̄_{a - 2^j}`,
/// coordinate `a` collects `c_j f_{a + 2^j}` over the zero bits `j` of `a`.
pub fn formal_derivative<A: CodeAlgebra>(
    alg: &A,
    consts: &[A::Elem],
    coeffs: &[A::Elem],
    xors: &mut u64,
) -> Vec<A::Elem> {
    let len = coeffs.len();
    let mut out = Vec::with_capacity(len);
    for a in 0..len {
        let mut acc: Option<A::Elem> = None;
        for (j, &c) in consts.iter().enumerate() {
            let bit = 1usize << j;
            if a & bit != 0 || a + bit >= len {
                continue;
            }
            if alg.is_zero(c) {
                continue;
            }
            let t = alg.mul_prepared(c, coeffs[a + bit], xors);
            acc = Some(match acc {
                None => t,
                Some(s) => alg.add(s, t, xors),
            });
        }
        out.push(acc.unwrap_or_else(|| alg.zero()));
    }
    out
}
