//! An explicit bounded fan-in arithmetic circuit for the `n × n` determinant.
//!
//! Layout of the circuit built by [`build_det_circuit`]:
//!
//! 1. `A^(2^j)` for `2^j ≤ n` by a chain of squarings.
//! 2. `A^m` for the remaining exponents needed as intermediate factors, each
//!    the product of the two halves of the binary digits of `m` (memoized, so
//!    every power is built at most once). For `tr(A^ℓ)` only the diagonal of
//!    the last product is formed.
//! 3. `tr(A^ℓ)^i` by doubling (`x^{2i} = (x^i)²`, `x^{2i+1} = x^{2i}·x`).
//! 4. The polynomials `p_ℓ` with their rational constants baked in as gates,
//!    multiplied in a balanced binary tree with truncation at degree `n`.
//!
//! Every sum is a balanced binary tree padded with a shared zero constant to
//! a power-of-two number of leaves, so an inner product has depth
//! `1 + ⌈log₂ n⌉` and the whole circuit has depth `O(log² n)`.

use std::collections::HashMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// Gate operands refer to strictly earlier gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Input {
        row: u32,
        col: u32,
    },
    /// Index into [`Circuit::constants`].
    Const(u32),
    Add(u32, u32),
    Mul(u32, u32),
}

impl Gate {
    fn operands(&self) -> Option<(u32, u32)> {
        match *self {
            Gate::Add(a, b) | Gate::Mul(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
    constants: Vec<BigRational>,
    output: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircuitStats {
    /// Longest chain of add/mul gates ending at the output.
    pub depth: usize,
    /// Total number of gates, inputs and constants included.
    pub size: usize,
}

impl Circuit {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn constants(&self) -> &[BigRational] {
        &self.constants
    }

    pub fn output(&self) -> usize {
        self.output as usize
    }

    /// Depth of every gate: 0 for inputs and constants.
    pub fn depths(&self) -> Vec<u32> {
        let mut depth = vec![0u32; self.gates.len()];
        for (i, gate) in self.gates.iter().enumerate() {
            if let Some((a, b)) = gate.operands() {
                depth[i] = 1 + depth[a as usize].max(depth[b as usize]);
            }
        }
        depth
    }

    pub fn stats(&self) -> CircuitStats {
        CircuitStats {
            depth: self.depths()[self.output()] as usize,
            size: self.gates.len(),
        }
    }

    /// Checks operand ordering and that every gate feeds the output.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.output as usize >= self.gates.len() {
            return bad(format!("output {} out of range", self.output));
        }
        let mut used = vec![false; self.gates.len()];
        used[self.output()] = true;
        for (i, gate) in self.gates.iter().enumerate().rev() {
            match *gate {
                Gate::Input { row, col } if row as usize >= self.n || col as usize >= self.n => {
                    return bad(format!("gate {i}: input ({row}, {col}) out of range"));
                }
                Gate::Const(c) if c as usize >= self.constants.len() => {
                    return bad(format!("gate {i}: unknown constant {c}"));
                }
                Gate::Add(a, b) | Gate::Mul(a, b) => {
                    if a as usize >= i || b as usize >= i {
                        return bad(format!("gate {i}: operand not earlier"));
                    }
                    if used[i] {
                        used[a as usize] = true;
                        used[b as usize] = true;
                    }
                }
                _ => {}
            }
        }
        match used.iter().position(|u| !u) {
            Some(i) => bad(format!("gate {i} does not reach the output")),
            None => Ok(()),
        }
    }

    fn field_constants<F: Field>(&self, field: &F) -> Result<Vec<F::Elem>> {
        self.constants
            .iter()
            .map(|q| {
                field.from_rational(q).map_err(|_| Error::DomainTooSmall {
                    field: field.spec(),
                    n: self.n,
                })
            })
            .collect()
    }

    fn check_input<F: Field>(&self, a: &Matrix<F>) -> Result<()> {
        if a.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: a.n(),
            });
        }
        a.field().spec().check_trace_formula(self.n)
    }

    /// Evaluates gates in index order.
    pub fn evaluate<F: Field>(&self, a: &Matrix<F>) -> Result<F::Elem> {
        self.check_input(a)?;
        let f = a.field();
        let consts = self.field_constants(f)?;
        let mut values: Vec<F::Elem> = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let v = eval_gate(f, gate, a, &consts, &values);
            values.push(v);
        }
        Ok(values.swap_remove(self.output()))
    }

    /// Evaluates one depth level at a time, each level on the rayon pool.
    /// Gates of a level only read earlier levels, so the result is identical
    /// to [`Circuit::evaluate`].
    pub fn evaluate_parallel<F: Field>(&self, a: &Matrix<F>) -> Result<F::Elem> {
        self.check_input(a)?;
        let f = a.field();
        let consts = self.field_constants(f)?;
        let depths = self.depths();
        let max_depth = depths.iter().copied().max().unwrap_or(0) as usize;
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); max_depth + 1];
        for (i, &d) in depths.iter().enumerate() {
            levels[d as usize].push(i);
        }
        drop(depths);
        let mut values = vec![f.zero(); self.gates.len()];
        for level in &levels {
            let computed: Vec<F::Elem> = level
                .par_iter()
                .map(|&i| eval_gate(f, &self.gates[i], a, &consts, &values))
                .collect();
            for (&i, v) in level.iter().zip(computed) {
                values[i] = v;
            }
        }
        Ok(values.swap_remove(self.output()))
    }

    /// Text dump, one gate per line: `idx input i j`, `idx const q`,
    /// `idx add a b` or `idx mul a b`, after a `#` header line.
    pub fn dump(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(
            out,
            "# tracedet circuit n={} gates={} output={}",
            self.n,
            self.gates.len(),
            self.output
        )?;
        for (i, gate) in self.gates.iter().enumerate() {
            match *gate {
                Gate::Input { row, col } => writeln!(out, "{i} input {row} {col}")?,
                Gate::Const(c) => writeln!(
                    out,
                    "{i} const {}",
                    Scalar::Rational(self.constants[c as usize].clone())
                )?,
                Gate::Add(a, b) => writeln!(out, "{i} add {a} {b}")?,
                Gate::Mul(a, b) => writeln!(out, "{i} mul {a} {b}")?,
            }
        }
        Ok(())
    }
}

fn eval_gate<F: Field>(
    f: &F,
    gate: &Gate,
    a: &Matrix<F>,
    consts: &[F::Elem],
    values: &[F::Elem],
) -> F::Elem {
    match *gate {
        Gate::Input { row, col } => a.get(row as usize, col as usize).clone(),
        Gate::Const(c) => consts[c as usize].clone(),
        Gate::Add(x, y) => f.add(&values[x as usize], &values[y as usize]),
        Gate::Mul(x, y) => f.mul(&values[x as usize], &values[y as usize]),
    }
}

type Id = u32;

struct Builder {
    n: usize,
    gates: Vec<Gate>,
    constants: Vec<BigRational>,
    const_ids: HashMap<BigRational, Id>,
    /// Full matrices `A^m`, row-major gate ids.
    powers: HashMap<usize, Vec<Id>>,
}

impl Builder {
    fn push(&mut self, gate: Gate) -> Id {
        let id = Id::try_from(self.gates.len()).expect("circuit exceeds u32 gate ids");
        self.gates.push(gate);
        id
    }

    fn constant(&mut self, q: BigRational) -> Id {
        if let Some(&id) = self.const_ids.get(&q) {
            return id;
        }
        let idx = self.constants.len() as u32;
        self.constants.push(q.clone());
        let id = self.push(Gate::Const(idx));
        self.const_ids.insert(q, id);
        id
    }

    fn int_constant(&mut self, z: i64) -> Id {
        self.constant(BigRational::from_integer(BigInt::from(z)))
    }

    fn add(&mut self, a: Id, b: Id) -> Id {
        self.push(Gate::Add(a, b))
    }

    fn mul(&mut self, a: Id, b: Id) -> Id {
        self.push(Gate::Mul(a, b))
    }

    /// Balanced sum, padded to a power of two with the zero constant.
    fn sum(&mut self, mut terms: Vec<Id>) -> Id {
        if terms.is_empty() {
            return self.int_constant(0);
        }
        if terms.len() > 1 {
            let zero = self.int_constant(0);
            terms.resize(terms.len().next_power_of_two(), zero);
        }
        while terms.len() > 1 {
            terms = terms.chunks(2).map(|p| self.add(p[0], p[1])).collect();
        }
        terms[0]
    }

    fn inner_product(&mut self, x: &[Id], y: &[Id], i: usize, j: usize) -> Id {
        let n = self.n;
        let terms = (0..n)
            .map(|k| self.mul(x[i * n + k], y[k * n + j]))
            .collect();
        self.sum(terms)
    }

    fn matmul(&mut self, x: &[Id], y: &[Id]) -> Vec<Id> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.inner_product(x, y, i, j));
            }
        }
        out
    }

    fn trace_of(&mut self, m: &[Id]) -> Id {
        let n = self.n;
        let diag = (0..n).map(|i| m[i * n + i]).collect();
        self.sum(diag)
    }

    /// Splits the binary digits of `m` (≥ 2 set bits) into a low and a high
    /// half of balanced popcount.
    fn split(m: usize) -> (usize, usize) {
        let bits: Vec<usize> = (0..usize::BITS as usize)
            .filter(|b| m >> b & 1 == 1)
            .collect();
        let low = bits[..bits.len() / 2].iter().fold(0, |acc, b| acc | 1 << b);
        (low, m & !low)
    }

    fn power(&mut self, m: usize) -> Vec<Id> {
        if let Some(p) = self.powers.get(&m) {
            return p.clone();
        }
        // Powers of two are filled in by the squaring chain.
        let (low, high) = Self::split(m);
        let (x, y) = (self.power(low), self.power(high));
        let p = self.matmul(&x, &y);
        self.powers.insert(m, p.clone());
        p
    }

    fn power_trace(&mut self, ell: usize) -> Id {
        if ell.is_power_of_two() {
            let p = self.powers[&ell].clone();
            return self.trace_of(&p);
        }
        let (low, high) = Self::split(ell);
        let (x, y) = (self.power(low), self.power(high));
        let diag = (0..self.n)
            .map(|i| self.inner_product(&x, &y, i, i))
            .collect();
        self.sum(diag)
    }

    /// `[x^0, x^1, …, x^count]` with `x^0` the one constant.
    fn powers_of(&mut self, x: Id, count: usize) -> Vec<Id> {
        let mut pw = vec![self.int_constant(1), x];
        for i in 2..=count {
            let next = if i % 2 == 0 {
                self.mul(pw[i / 2], pw[i / 2])
            } else {
                self.mul(pw[i - 1], x)
            };
            pw.push(next);
        }
        pw.truncate(count + 1);
        pw
    }

    /// Truncated product of two coefficient vectors; `None` is a known zero.
    fn poly_mul(&mut self, x: &[Option<Id>], y: &[Option<Id>]) -> Vec<Option<Id>> {
        let one = self.int_constant(1);
        let n = self.n;
        (0..=n)
            .map(|d| {
                let mut terms = Vec::new();
                for i in 0..=d {
                    if let (Some(a), Some(b)) = (x[i], y[d - i]) {
                        terms.push(match (a == one, b == one) {
                            (true, _) => b,
                            (_, true) => a,
                            _ => self.mul(a, b),
                        });
                    }
                }
                (!terms.is_empty()).then(|| self.sum(terms))
            })
            .collect()
    }

    fn poly_tree(&mut self, polys: &[Vec<Option<Id>>]) -> Vec<Option<Id>> {
        match polys {
            [single] => single.clone(),
            _ => {
                let mid = polys.len() / 2;
                let left = self.poly_tree(&polys[..mid]);
                let right = self.poly_tree(&polys[mid..]);
                self.poly_mul(&left, &right)
            }
        }
    }
}

/// `(-1)^i / (i! · ℓ^i)`.
fn p_ell_constant(ell: usize, i: usize) -> BigRational {
    let mut denom = BigInt::one();
    for j in 1..=i {
        denom *= BigInt::from(j * ell);
    }
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    BigRational::new(BigInt::from(sign), denom)
}

/// Builds the determinant circuit for `n × n` inputs. The circuit is field
/// independent; its rational constants are mapped into the field at
/// evaluation. `n = 0` yields the constant 1.
pub fn build_det_circuit(n: usize) -> Circuit {
    let mut b = Builder {
        n,
        gates: Vec::new(),
        constants: Vec::new(),
        const_ids: HashMap::new(),
        powers: HashMap::new(),
    };
    if n == 0 {
        let output = b.int_constant(1);
        return Circuit {
            n,
            gates: b.gates,
            constants: b.constants,
            output,
        };
    }

    let inputs: Vec<Id> = (0..n * n)
        .map(|idx| {
            b.push(Gate::Input {
                row: (idx / n) as u32,
                col: (idx % n) as u32,
            })
        })
        .collect();
    b.powers.insert(1, inputs);
    let mut e = 2;
    while e <= n {
        let half = b.powers[&(e / 2)].clone();
        let sq = b.matmul(&half, &half);
        b.powers.insert(e, sq);
        e *= 2;
    }

    let traces: Vec<Id> = (1..=n).map(|ell| b.power_trace(ell)).collect();
    // intermediate powers are no longer needed
    b.powers.clear();

    let polys: Vec<Vec<Option<Id>>> = (1..=n)
        .map(|ell| {
            let count = n / ell;
            let pw = b.powers_of(traces[ell - 1], count);
            let mut coeffs = vec![None; n + 1];
            coeffs[0] = Some(pw[0]);
            for (i, &x) in pw.iter().enumerate().skip(1) {
                let c = b.constant(p_ell_constant(ell, i));
                coeffs[ell * i] = Some(b.mul(c, x));
            }
            coeffs
        })
        .collect();
    let product = b.poly_tree(&polys);
    let top = product[n].expect("p_n contributes an X^n term");
    let output = if n % 2 == 1 {
        let minus_one = b.int_constant(-1);
        b.mul(minus_one, top)
    } else {
        top
    };

    let mut circuit = Circuit {
        n,
        gates: b.gates,
        constants: b.constants,
        output,
    };
    prune(&mut circuit);
    circuit
}

/// Drops gates that do not reach the output (unused constants, the zero
/// padding constant when no sum needed it) and renumbers the rest.
fn prune(c: &mut Circuit) {
    let mut live = vec![false; c.gates.len()];
    live[c.output()] = true;
    for i in (0..c.gates.len()).rev() {
        if live[i] {
            if let Some((a, b)) = c.gates[i].operands() {
                live[a as usize] = true;
                live[b as usize] = true;
            }
        }
    }
    if live.iter().all(|&l| l) {
        return;
    }
    let mut new_id = vec![u32::MAX; c.gates.len()];
    let mut gates = Vec::with_capacity(live.iter().filter(|&&l| l).count());
    let mut constants = Vec::new();
    for (i, gate) in c.gates.iter().enumerate() {
        if !live[i] {
            continue;
        }
        new_id[i] = gates.len() as u32;
        gates.push(match *gate {
            Gate::Const(k) => {
                constants.push(c.constants[k as usize].clone());
                Gate::Const(constants.len() as u32 - 1)
            }
            Gate::Add(a, b) => Gate::Add(new_id[a as usize], new_id[b as usize]),
            Gate::Mul(a, b) => Gate::Mul(new_id[a as usize], new_id[b as usize]),
            input => input,
        });
    }
    c.output = new_id[c.output()];
    c.gates = gates;
    c.constants = constants;
}
