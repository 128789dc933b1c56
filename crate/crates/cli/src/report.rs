//! Machine-readable results. Polynomials appear as their canonical strings.

use serde::{Deserialize, Serialize};

use osculate_core::arith::{Field, QuadExt, Rational};
use osculate_core::classify::{Branch, Classification, Verdict};
use osculate_core::groebner::{HilbertData, Ideal};
use osculate_core::local::{graph_intersection_multiplicity, truncated_local_multiplicity, GraphCurve};
use osculate_core::poly::matrix::inverse;
use osculate_core::poly::{Monomial, Order, Poly, PolyRing};
use osculate_core::xk::SingularityCensus;
use osculate_core::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldTag {
    Base,
    Quadext(String),
}

impl FieldTag {
    fn of(coeffs: &[QuadExt]) -> Self {
        match coeffs.iter().find_map(|c| c.d().cloned()) {
            Some(d) => FieldTag::Quadext(d.to_string()),
            None => FieldTag::Base,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// `coeffs[k]` multiplies `x^(k+1)` in the chart of the classification.
    pub coeffs: Vec<QuadExt>,
    pub field: FieldTag,
    /// The same curve as a form in the input coordinates.
    pub original: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub r: u32,
    pub quad: [QuadExt; 3],
    pub delta: QuadExt,
    pub branch: Branch,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<QuadExt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<Order>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub graph: Vec<QuadExt>,
    pub substitution: Order,
    pub local_algebra: Order,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    /// `smooth`, `double-point` or `higher-multiplicity`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u32>,
    /// Tangent line, or the tangent cone at a node, in input coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent: Option<String>,
    pub witnesses: Vec<WitnessReport>,
    pub trace: Vec<StepReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

/// Degree-two part of the chart equation: the tangent line when it is a
/// square, the whole cone otherwise, moved back to input coordinates.
fn tangent_cone<F: Field>(c: &Classification<F>) -> Result<String> {
    let f = &c.normalized.affine;
    let q = |a, b| f.coefficient(&Monomial(vec![a, b])).to_quad();
    let (a20, a11, a02) = (q(2, 0), q(1, 1), q(0, 2));
    let ring = c.normalized.original.ring().clone();
    let x = Poly::<QuadExt>::var(&ring, 0);
    let y = Poly::<QuadExt>::var(&ring, 1);
    let disc = a11.mul(&a11).sub(&QuadExt::from_int(4).mul(&a20).mul(&a02));
    let cone = if disc.is_zero() {
        &x.scale(&a11) + &y.scale(&QuadExt::from_int(2).mul(&a02))
    } else {
        &(&x.pow(2).scale(&a20) + &(&x * &y).scale(&a11)) + &y.pow(2).scale(&a02)
    };
    let inv: Vec<Vec<QuadExt>> =
        inverse(&c.normalized.transform)?.iter().map(|row| row.iter().map(F::to_quad).collect()).collect();
    Ok(cone.linear_change(&inv)?.monic().to_string())
}

impl VerdictReport {
    pub fn new<F: Field>(c: &Classification<F>, oracle: bool) -> Result<Self> {
        let trace = c
            .trace
            .steps
            .iter()
            .map(|st| StepReport {
                r: st.r,
                quad: st.quadratic.clone(),
                delta: st.discriminant.clone(),
                branch: st.branch,
                lambda: st.lambda.clone(),
                i: st.multiplicity,
            })
            .collect();
        let mut report = VerdictReport {
            kind: String::new(),
            s: None,
            multiplicity: None,
            tangent: None,
            witnesses: Vec::new(),
            trace,
            oracle: None,
        };
        match &c.verdict {
            Verdict::Smooth { tangent_original, .. } => {
                report.kind = "smooth".into();
                report.tangent = tangent_original.as_ref().map(|t| t.monic().to_string());
            }
            Verdict::MultiplicityAtLeast3 { multiplicity } => {
                report.kind = "higher-multiplicity".into();
                report.multiplicity = Some(*multiplicity);
            }
            Verdict::DoublePoint { s, witnesses, witnesses_original } => {
                report.kind = "double-point".into();
                report.s = Some(*s);
                report.multiplicity = Some(2);
                report.tangent = Some(tangent_cone(c)?);
                report.witnesses = witnesses
                    .iter()
                    .enumerate()
                    .map(|(k, w)| WitnessReport {
                        coeffs: w.coeffs().to_vec(),
                        field: FieldTag::of(w.coeffs()),
                        original: witnesses_original.get(k).map(|p| p.to_string()),
                    })
                    .collect();
                if oracle {
                    report.oracle = Some(oracle_report(c)?);
                }
            }
        }
        Ok(report)
    }
}

// Every graph met along the way (step graphs and witnesses) is checked
// against the truncated local algebra.
fn oracle_report<F: Field>(c: &Classification<F>) -> Result<OracleReport> {
    let affine = c.normalized.affine.map_coeffs(F::to_quad);
    let plane = PolyRing::of(&["x", "y"]);
    let affine = affine.to_ring(&plane)?;
    let mut graphs: Vec<GraphCurve<QuadExt>> = Vec::new();
    let mut prefix = Vec::new();
    for st in &c.trace.steps {
        if let Some(l) = &st.lambda {
            prefix.push(l.clone());
            graphs.push(GraphCurve::new(prefix.clone()));
        }
    }
    if let Verdict::DoublePoint { witnesses, .. } = &c.verdict {
        graphs.extend(witnesses.iter().cloned());
    }
    let mut checks = Vec::new();
    for g in graphs {
        let substitution = graph_intersection_multiplicity(&affine, &g)?;
        let local_algebra = truncated_local_multiplicity(&affine, &g.equation(&plane), None)?.value;
        checks.push(OracleCheck { graph: g.coeffs().to_vec(), substitution, local_algebra });
    }
    let agree = checks.iter().all(|c| c.substitution == c.local_algebra);
    Ok(OracleReport { checks, agree })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealReport {
    pub ring: Vec<String>,
    pub generators: Vec<String>,
}

impl From<&Ideal> for IdealReport {
    fn from(i: &Ideal) -> Self {
        IdealReport { ring: i.ring().vars().to_vec(), generators: i.gens().iter().map(|g| g.to_string()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub ring: Vec<String>,
    #[serde(flatten)]
    pub data: HilbertData,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImplicitReport {
    pub equation: String,
    pub degree: u32,
    pub map_degree: u32,
    pub possibly_non_minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub ideal: IdealReport,
    pub length: Option<u64>,
    pub hilbert: Vec<u64>,
    pub curvilinear: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub parameterization: String,
    pub implicit_equation: String,
    #[serde(flatten)]
    pub census: SingularityCensus,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArtifactCheck {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReproReport {
    pub case: String,
    pub anchor: String,
    pub artifacts: Vec<ArtifactCheck>,
    pub pass: bool,
}

/// Lowest-terms rendering used in human output.
pub fn show_point(p: &[Rational]) -> String {
    format!("[{}]", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
}
