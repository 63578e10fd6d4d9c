use std::fmt::Write as _;

use brauer_ring::linalg::{smith, Lattice, PivotRule};
use brauer_ring::{BrauerContext, RPlusElement};
use group_core::{Group, Subgroup};

use crate::error::RelationsError;
use crate::generators::{generate_relations, BasicRelation, Options, RelationKind};

/// Outcome of comparing Ker(φ_{N≤Ω}) with the span of basic relations.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub kinds: Vec<RelationKind>,
    pub dimension: usize,
    pub kernel_rank: usize,
    pub span_rank: usize,
    pub equal: bool,
    /// Hermite basis vectors of the kernel outside the span.
    pub missing: Vec<RPlusElement>,
    pub generators: Vec<BasicRelation>,
    /// Smith diagonal of the φ matrix (irreducibles × pair classes).
    pub phi_diagonal: Vec<i128>,
    /// Smith diagonal of the stacked generator coordinates.
    pub span_diagonal: Vec<i128>,
    pub kernel_basis: Vec<RPlusElement>,
}

impl KernelReport {
    pub fn count(&self, kind: RelationKind) -> usize {
        self.generators.iter().filter(|r| r.kind == kind).count()
    }

    /// Plain-text certificate: generators, kernel basis, diagonals, verdict.
    pub fn to_certificate_text(&self, g: &Group, n: &Subgroup) -> String {
        let mut out = String::new();
        let name = g.name().unwrap_or("?");
        let kinds: Vec<String> = self.kinds.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(out, "group {name} order {}", g.order());
        let _ = writeln!(out, "normal {:?}", n.elements());
        let _ = writeln!(out, "kinds {}", kinds.join(","));
        let _ = writeln!(out, "classes {}", self.dimension);
        let _ = writeln!(out, "phi_diagonal {:?}", self.phi_diagonal);
        let _ = writeln!(out, "span_diagonal {:?}", self.span_diagonal);
        let _ = writeln!(out, "kernel_rank {}", self.kernel_rank);
        let _ = writeln!(out, "span_rank {}", self.span_rank);
        let _ = writeln!(out, "equal {}", self.equal);
        for (i, v) in self.kernel_basis.iter().enumerate() {
            let _ = writeln!(out, "kernel {i}: {v:?}");
        }
        for rel in &self.generators {
            let _ = writeln!(out, "generator {} B={:?}: {:?}", rel.kind, rel.b.elements(), rel.element);
        }
        for v in &self.missing {
            let _ = writeln!(out, "missing {v:?}");
        }
        out
    }
}

/// Decide Ker(φ_{N≤Ω}) = span of the relations of `kinds` as lattices.
pub fn verify_kernel_equality(
    g: &Group,
    n: &Subgroup,
    kinds: &[RelationKind],
    options: Options,
) -> Result<KernelReport, RelationsError> {
    let ctx = BrauerContext::shared(g, n)?;
    let dimension = ctx.classes().len();
    let generators = generate_relations(g, n, kinds, options)?;
    let coords: Vec<Vec<i128>> = generators.iter().map(|r| ctx.coords(&r.element)).collect::<Result<_, _>>()?;
    let kernel = ctx.kernel_lattice()?;
    let span = Lattice::from_generators(dimension, &coords)?;
    if !kernel.contains_lattice(&span)? {
        return Err(RelationsError::SpanOutsideKernel);
    }
    let mut missing = Vec::new();
    for v in kernel.basis() {
        if !span.contains(v)? {
            missing.push(ctx.element(v)?);
        }
    }
    let phi_diagonal = ctx.smith(PivotRule::default())?.diagonal;
    let span_diagonal = smith(&span.basis().to_vec(), dimension, PivotRule::default())?.diagonal;
    let kernel_basis = kernel.basis().iter().map(|v| ctx.element(v)).collect::<Result<_, _>>()?;
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    Ok(KernelReport {
        kinds,
        dimension,
        kernel_rank: kernel.rank(),
        span_rank: span.rank(),
        equal: span == kernel,
        missing,
        generators,
        phi_diagonal,
        span_diagonal,
        kernel_basis,
    })
}

/// The check with all three kinds and default options.
pub fn verify_kernel_span(g: &Group, n: &Subgroup) -> Result<KernelReport, RelationsError> {
    verify_kernel_equality(g, n, &RelationKind::ALL, Options::default())
}
