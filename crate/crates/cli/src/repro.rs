//! Reproduction cases for the worked examples, each with its expected
//! outputs embedded as exact strings.

use osculate_core::arith::{int, QuadExt, Rational};
use osculate_core::classify::{classify_double_point, Classification, Verdict};
use osculate_core::geometry::{fiber_test, project_scheme, LinearCenter, PlaneParameterization, RationalNormalCurve};
use osculate_core::groebner::{hilbert_function, ideal_combine, zero_dim_radical, CombineOp, Ideal};
use osculate_core::local::{branch_separation, graph_intersection_multiplicity, GraphCurve};
use osculate_core::poly::{parse_poly, Order, PolyRing, RingRef};
use osculate_core::xk::{classify_all_singularities, is_curvilinear, xk_ideal};
use osculate_core::Result;

use crate::report::{ArtifactCheck, ReproReport};

pub const OSCNODE_QUARTIC: &str = "y^2*z^2 - 2*x^2*y*z + x^4 + x^2*y^2";
pub const SEXTIC: &str = "s^6 + t^6; -s^5*t + 3*s*t^5 - s^3*t^3; 9*s^2*t^4 + s^4*t^2 - s^3*t^3";
pub const CENTER: &str = "a + g; 3*f - b - d; 9*e + c - d";

pub struct ReproCase {
    pub name: String,
    pub anchor: String,
    pub expected: Vec<(String, String)>,
}

fn case(name: &str, anchor: &str, expected: &[(&str, &str)]) -> ReproCase {
    ReproCase {
        name: name.into(),
        anchor: anchor.into(),
        expected: expected.iter().map(|(l, v)| (l.to_string(), v.to_string())).collect(),
    }
}

// Generators in lexicographic text order, for ideals with no preferred order.
fn sorted_gens(i: &Ideal) -> String {
    let mut g: Vec<String> = i.gens().iter().map(|p| p.to_string()).collect();
    g.sort();
    format!("({})", g.join(", "))
}

/// Every reproduction case with its expected artifacts.
pub fn repro_manifest() -> Vec<ReproCase> {
    let mut cases = vec![
        case(
            "example-4.1",
            "worked example: the oscnode quartic y^2 - 2x^2y + x^4 + x^2y^2 at the origin",
            &[
                ("verdict", "A_5"),
                ("tangent", "y"),
                ("step 1", "r-b2, lambda = 0, i = 4"),
                ("conic", "y = x^2"),
                ("step 2", "r-b2, lambda = 1, i = 6"),
                ("step 3", "r-a, delta = -4"),
                ("cubics", "y = -sqrt(-1)*x^3 + x^2; y = sqrt(-1)*x^3 + x^2"),
                ("i(C, D1)", "7"),
                ("i(C, D2)", "7"),
                ("i(D1, D2)", "3"),
            ],
        ),
        case(
            "example-6.1-part1",
            "worked example: projections from the rational normal sextic with center (a+g, 3f-b-d, 9e+c-d)",
            &[
                ("3A+3B image", "(w^2, v*w, -u*w + v^2)"),
                ("3A+3B hilbert", "1, 3, 3"),
                ("3A+3B curvilinear", "true"),
                ("4A+4B image", "(w^2, v^2*w, -u*v*w + v^3)"),
                ("4A+4B length", "5"),
                ("4A+4B hilbert", "1, 3, 5"),
                ("4A+4B curvilinear", "false"),
                ("R image", "(v - 1/9*w, u - 2/9*w)"),
                ("cone fiber over R", "(a - g, b - g, c - g, d - g, e - g, f - g)"),
                ("cone fiber length", "1"),
            ],
        ),
        case(
            "example-6.1-part2",
            "worked example: singularities of the sextic s^6+t^6, -s^5t+3st^5-s^3t^3, 9s^2t^4+s^4t^2-s^3t^3",
            &[
                ("H(X2)", "1, 3, 6, 10 for t >= 3"),
                ("H(radical)", "1, 3, 6, 8 for t >= 3"),
                ("H(X2 + cusp conic)", "1, 3, 5, 7, 4, 0 for t >= 5"),
                ("census", "A_5 at [1, 0, 0]; 7 x A_1"),
            ],
        ),
        case(
            "remark-3.2",
            "remark: y^2 - x^5, the prototype A_4",
            &[("verdict", "A_4"), ("step 1", "r-b2, lambda = 0, i = 5"), ("step 2", "r-b1, lambda = 0, i = 5")],
        ),
        case(
            "remark-3.3",
            "remark: y(y - x^2), a reducible tacnode",
            &[
                ("verdict", "A_3"),
                ("step 1", "r-b2, lambda = 0, i = inf"),
                ("step 2", "r-a, delta = 1"),
                ("witness multiplicities", "inf; inf"),
            ],
        ),
    ];
    for s in 1..=12u32 {
        let verdict = format!("A_{s}");
        let steps = s.div_ceil(2).to_string();
        cases.push(ReproCase {
            name: format!("normal-forms-{s}"),
            anchor: format!("normal form y^2 z^{} - x^{} at [0, 0, 1]", s - 1, s + 1),
            expected: vec![("verdict".into(), verdict), ("steps".into(), steps)],
        });
    }
    cases
}

fn plane() -> RingRef {
    PolyRing::of(&["x", "y", "z"])
}

fn origin() -> [Rational; 3] {
    [int(0), int(0), int(1)]
}

fn label(c: &Classification<Rational>) -> String {
    c.verdict.s().map_or_else(|| "no double point".into(), |s| format!("A_{s}"))
}

fn step_line(c: &Classification<Rational>, r: usize) -> String {
    let Some(st) = c.trace.steps.get(r) else { return "absent".into() };
    match (&st.lambda, st.multiplicity) {
        (Some(l), Some(i)) => format!("{}, lambda = {l}, i = {i}", st.branch),
        _ => format!("{}, delta = {}", st.branch, st.discriminant),
    }
}

fn graph_text(g: &GraphCurve<QuadExt>) -> String {
    format!("y = {}", g.as_poly(&PolyRing::of(&["x", "y"]), 0))
}

fn witnesses(c: &Classification<Rational>) -> Vec<GraphCurve<QuadExt>> {
    match &c.verdict {
        Verdict::DoublePoint { witnesses, .. } => witnesses.clone(),
        _ => Vec::new(),
    }
}

fn classify_text(text: &str) -> Result<Classification<Rational>> {
    classify_double_point(&parse_poly(text, &plane())?, &origin(), None)
}

fn hilbert_line(ideal: &Ideal, up_to: u32) -> Result<String> {
    let h = hilbert_function(ideal, up_to)?;
    let from = h.stable_from.unwrap_or(up_to) as usize;
    let head: Vec<String> = h.values[..=from.min(h.values.len() - 1)].iter().map(u64::to_string).collect();
    Ok(format!("{} for t >= {from}", head.join(", ")))
}

fn oscnode_case() -> Artifacts {
    let c = classify_text(OSCNODE_QUARTIC)?;
    let report = crate::report::VerdictReport::new(&c, false)?;
    let w = witnesses(&c);
    let affine = c.normalized.affine.map_coeffs(|x: &Rational| QuadExt::rational(x.clone()));
    let mut out = vec![
        ("verdict".to_string(), label(&c)),
        ("tangent".into(), report.tangent.unwrap_or_default()),
        ("step 1".into(), step_line(&c, 0)),
    ];
    let conic: Vec<QuadExt> = c.trace.steps.iter().take(2).filter_map(|s| s.lambda.clone()).collect();
    out.push(("conic".into(), graph_text(&GraphCurve::new(conic))));
    out.push(("step 2".into(), step_line(&c, 1)));
    out.push(("step 3".into(), step_line(&c, 2)));
    out.push(("cubics".into(), w.iter().map(graph_text).collect::<Vec<_>>().join("; ")));
    for (k, g) in w.iter().enumerate() {
        out.push((format!("i(C, D{})", k + 1), graph_intersection_multiplicity(&affine, g)?.to_string()));
    }
    if w.len() == 2 {
        out.push(("i(D1, D2)".into(), branch_separation(&w[0], &w[1]).to_string()));
    }
    Ok(out)
}

fn projection_case() -> Artifacts {
    let curve = RationalNormalCurve::with_letters(6)?;
    let center = LinearCenter::parse(CENTER, curve.ring())?;
    let uvw = ["u", "v", "w"];
    let three = project_scheme(&curve.fat_endpoints(3)?, &center, &uvw)?;
    let four = project_scheme(&curve.fat_endpoints(4)?, &center, &uvw)?;
    let prefix = |i: &Ideal| -> Result<String> {
        let h = hilbert_function(i, 2)?;
        Ok(h.values[..3].iter().map(u64::to_string).collect::<Vec<_>>().join(", "))
    };
    let ones = vec![int(1); 7];
    let r_ideal = Ideal::new(
        curve.ring(),
        (0..6)
            .map(|i| parse_poly(&format!("{} - {}", curve.ring().vars()[i], curve.ring().vars()[i + 1]), curve.ring()))
            .collect::<Result<_>>()?,
    )?;
    let r_image = project_scheme(&r_ideal, &center, &uvw)?;
    let image_point: Vec<Rational> = center.forms().iter().map(|f| f.eval(&ones)).collect();
    let fiber = fiber_test(&curve, &center, &image_point)?;
    Ok(vec![
        ("3A+3B image".into(), three.to_string()),
        ("3A+3B hilbert".into(), prefix(&three)?),
        ("3A+3B curvilinear".into(), is_curvilinear(&three)?.to_string()),
        ("4A+4B image".into(), four.to_string()),
        ("4A+4B length".into(), hilbert_function(&four, 0)?.stable_value.unwrap_or(0).to_string()),
        ("4A+4B hilbert".into(), prefix(&four)?),
        ("4A+4B curvilinear".into(), is_curvilinear(&four)?.to_string()),
        ("R image".into(), r_image.to_string()),
        ("cone fiber over R".into(), sorted_gens(&fiber.ideal)),
        ("cone fiber length".into(), fiber.length.to_string()),
    ])
}

fn census_case() -> Artifacts {
    let p = PlaneParameterization::parse(SEXTIC)?;
    let ix2 = xk_ideal(&p, 2)?;
    let rad = zero_dim_radical(&ix2, 1)?;
    let conic = Ideal::new(ix2.ring(), vec![parse_poly("y^2 - 4*x*z", ix2.ring())?])?;
    let cusp = ideal_combine(&ix2, &conic, CombineOp::Sum)?;
    let census = classify_all_singularities(&p)?;
    let mut parts = Vec::new();
    for pt in &census.points {
        let name = pt.s.map_or_else(|| "unlabelled".to_string(), |s| format!("A_{s}"));
        match (&pt.image, pt.cluster_size) {
            (Some(image), 1) => {
                let coords: Vec<String> = image.iter().map(QuadExt::to_string).collect();
                parts.push(format!("{name} at [{}]", coords.join(", ")));
            }
            (_, k) => parts.push(format!("{k} x {name}")),
        }
    }
    Ok(vec![
        ("H(X2)".into(), hilbert_line(&ix2, 3)?),
        ("H(radical)".into(), hilbert_line(&rad, 3)?),
        ("H(X2 + cusp conic)".into(), hilbert_line(&cusp, 5)?),
        ("census".into(), parts.join("; ")),
    ])
}

fn remark_a4() -> Artifacts {
    let c = classify_text("y^2*z^3 - x^5")?;
    Ok(vec![("verdict".into(), label(&c)), ("step 1".into(), step_line(&c, 0)), ("step 2".into(), step_line(&c, 1))])
}

fn remark_a3() -> Artifacts {
    let c = classify_text("y*(y*z - x^2)")?;
    let affine = c.normalized.affine.map_coeffs(|x: &Rational| QuadExt::rational(x.clone()));
    let mults: Vec<String> = witnesses(&c)
        .iter()
        .map(|g| graph_intersection_multiplicity(&affine, g).map(|o: Order| o.to_string()))
        .collect::<Result<_>>()?;
    Ok(vec![
        ("verdict".into(), label(&c)),
        ("step 1".into(), step_line(&c, 0)),
        ("step 2".into(), step_line(&c, 1)),
        ("witness multiplicities".into(), mults.join("; ")),
    ])
}

fn normal_form(s: u32) -> Artifacts {
    let c = classify_text(&format!("y^2*z^{} - x^{}", s - 1, s + 1))?;
    Ok(vec![("verdict".into(), label(&c)), ("steps".into(), c.trace.steps.len().to_string())])
}

type Artifacts = Result<Vec<(String, String)>>;

fn runner(name: &str) -> Option<Box<dyn Fn() -> Artifacts>> {
    Some(match name {
        "example-4.1" => Box::new(oscnode_case),
        "example-6.1-part1" => Box::new(projection_case),
        "example-6.1-part2" => Box::new(census_case),
        "remark-3.2" => Box::new(remark_a4),
        "remark-3.3" => Box::new(remark_a3),
        _ => {
            let s: u32 = name.strip_prefix("normal-forms-")?.parse().ok()?;
            if !(1..=12).contains(&s) {
                return None;
            }
            Box::new(move || normal_form(s))
        }
    })
}

/// Runs one case and diffs every artifact against its expected string.
pub fn run_case(case: &ReproCase) -> Result<ReproReport> {
    let actual = runner(&case.name).expect("manifest names a known case")()?;
    let artifacts: Vec<ArtifactCheck> = case
        .expected
        .iter()
        .map(|(label, expected)| {
            let actual = actual.iter().find(|(l, _)| l == label).map_or("<missing>".to_string(), |(_, v)| v.clone());
            ArtifactCheck { label: label.clone(), ok: &actual == expected, expected: expected.clone(), actual }
        })
        .collect();
    let pass = artifacts.iter().all(|a| a.ok);
    Ok(ReproReport { case: case.name.clone(), anchor: case.anchor.clone(), artifacts, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_shape() {
        let m = repro_manifest();
        assert_eq!(m.len(), 17);
        assert!(m.iter().all(|c| !c.anchor.is_empty() && !c.expected.is_empty()));
        let tacnode = m.iter().find(|c| c.name == "remark-3.3").unwrap();
        assert_eq!(tacnode.expected[0].1, "A_3");
        let nf = m.iter().find(|c| c.name == "normal-forms-7").unwrap();
        assert_eq!(nf.expected[0].1, "A_7");
        assert!(m.iter().all(|c| runner(&c.name).is_some()));
        assert!(runner("normal-forms-13").is_none());
    }
}
