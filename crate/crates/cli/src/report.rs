//! Reports: one canonical, machine-diffable structure per command, rendered
//! as aligned text or JSON. All numerics are exact integers or "p/q"
//! strings; serialization is deterministic (fixed field order, no maps) and
//! lossless under reparse.

use serde::{Deserialize, Serialize};

use symsurf::{
    ClassCheck, CoverInvariants, HClass, Manifold4, ReasonCode, SWReport, SearchHit, VerdictStatus,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input_echo: InputEcho,
    pub results: ReportResults,
    pub warnings: Vec<String>,
}

/// Canonical echo of the inputs: the manifold in file-schema form plus the
/// command arguments. A preset and an equivalent explicit file echo
/// identically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub manifold: Manifold4,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dmax: Option<i64>,
}

impl InputEcho {
    pub fn manifold_only(m: &Manifold4) -> Self {
        InputEcho {
            manifold: m.clone(),
            class: None,
            divisor: None,
            indices: None,
            bound: None,
            dmax: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportResults {
    Invariants(InvariantsResult),
    Cover(CoverInvariants),
    Obstruct(ObstructResult),
    Search(SearchResult),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsResult {
    pub rank: usize,
    pub sigma: i64,
    pub b2_plus: u32,
    pub b2_minus: u32,
    pub even: bool,
    pub k_sq: i64,
    pub k_characteristic: bool,
    pub spin: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructResult {
    pub status: VerdictStatus,
    #[serde(flatten)]
    pub check: ClassCheck,
    pub reasons: Vec<ReasonCode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_positive: Option<bool>,
    pub sw: SWReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub count: usize,
    pub hits: Vec<SearchHit>,
}

pub fn invariants_result(m: &Manifold4) -> symsurf::Result<InvariantsResult> {
    Ok(InvariantsResult {
        rank: m.rank(),
        sigma: m.sigma(),
        b2_plus: m.b2_plus(),
        b2_minus: m.b2_minus(),
        even: m.lattice().is_even(),
        k_sq: m.lattice().square(m.canonical_class())?,
        k_characteristic: m.lattice().is_characteristic(m.canonical_class())?,
        spin: m.spin(),
    })
}

pub fn obstruct_result(
    m: &Manifold4,
    b: &HClass,
    check: ClassCheck,
    sw: SWReport,
) -> symsurf::Result<ObstructResult> {
    let status = if check.is_obstructed() {
        VerdictStatus::Obstructed
    } else {
        VerdictStatus::Inconclusive
    };
    Ok(ObstructResult {
        status,
        reasons: check.reasons(),
        omega_positive: m.omega_positive(b)?,
        check,
        sw,
    })
}

fn class_text(c: &HClass) -> String {
    let parts: Vec<String> = c.coeffs().iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

fn reason_text(codes: &[ReasonCode]) -> String {
    if codes.is_empty() {
        return "-".to_string();
    }
    codes
        .iter()
        .map(|c| serde_json::to_value(c).expect("reason code serializes"))
        .map(|v| v.as_str().expect("reason code is a string").to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn certificate_text(v: &symsurf::ObstructionVerdict) -> String {
    match v.certificate.kind {
        symsurf::CertificateKind::ViaSpinFuruta => "ViaSpinFuruta".to_string(),
        symsurf::CertificateKind::ViaDivisibility => "ViaDivisibility".to_string(),
        symsurf::CertificateKind::None => "None".to_string(),
    }
}

fn k_text(v: &symsurf::ObstructionVerdict) -> String {
    match v.certificate.divisibility {
        Some(facts) if facts.k == 0 => "all".to_string(),
        Some(facts) => facts.k.to_string(),
        None => "-".to_string(),
    }
}

/// Aligned text table. Rows are (already sorted) search hits or verdicts.
fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String], widths: &[usize]| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    out.push_str(&fmt_row(&header_cells, &widths));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row, &widths));
        out.push('\n');
    }
    out
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", report.command));
    out.push_str(&format!(
        "manifold: {} (rank {})\n",
        report.input_echo.manifold.name(),
        report.input_echo.manifold.rank()
    ));
    match &report.results {
        ReportResults::Invariants(r) => {
            out.push_str(&format!("rank:             {}\n", r.rank));
            out.push_str(&format!("sigma:            {}\n", r.sigma));
            out.push_str(&format!("b2+:              {}\n", r.b2_plus));
            out.push_str(&format!("b2-:              {}\n", r.b2_minus));
            out.push_str(&format!(
                "parity:           {}\n",
                if r.even { "even" } else { "odd" }
            ));
            out.push_str(&format!("K^2:              {}\n", r.k_sq));
            out.push_str(&format!("K characteristic: {}\n", r.k_characteristic));
            out.push_str(&format!("spin:             {}\n", r.spin));
        }
        ReportResults::Cover(c) => {
            out.push_str(&format!("d:          {}\n", c.d));
            out.push_str(&format!("A:          {}\n", class_text(&c.base_class)));
            out.push_str(&format!("K_base:     {}\n", class_text(&c.k_base)));
            out.push_str(&format!("K_bar^2:    {}\n", c.k_sq));
            out.push_str(&format!("sigma_bar:  {}\n", c.sigma_bar));
            out.push_str(&format!("spin_bar:   {:?}\n", c.spin_bar));
            out.push_str(&format!("b2+ >=      {}\n", c.b2plus_lb));
        }
        ReportResults::Obstruct(r) => {
            let status = match r.status {
                VerdictStatus::Obstructed => "OBSTRUCTED",
                VerdictStatus::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!("status: {status}\n"));
            out.push_str(&format!("B:      {}\n", class_text(&r.check.b)));
            out.push_str(&format!("gcd(B): {}\n", r.check.divisibility));
            out.push_str(&format!(
                "adjunction integer K.B + B^2 = {} ({})\n",
                r.check.adjunction_integer,
                if r.check.adjunction_connected_ok {
                    "connected representative not excluded by adjunction"
                } else {
                    "no connected embedded symplectic representative"
                }
            ));
            if let Some(op) = r.omega_positive {
                out.push_str(&format!("<omega, B> > 0: {op}\n"));
            }
            if !r.reasons.is_empty() {
                out.push_str(&format!("reasons: {}\n", reason_text(&r.reasons)));
            }
            if r.check.verdicts.is_empty() {
                out.push_str("no factorization B = d*A with d >= 2\n");
            } else {
                let rows: Vec<Vec<String>> = r
                    .check
                    .verdicts
                    .iter()
                    .map(|v| {
                        vec![
                            v.d.to_string(),
                            class_text(&v.a),
                            match v.status {
                                VerdictStatus::Obstructed => "OBSTRUCTED".to_string(),
                                VerdictStatus::Inconclusive => "INCONCLUSIVE".to_string(),
                            },
                            certificate_text(v),
                            k_text(v),
                            v.k_base_sq.to_string(),
                            reason_text(&v.reasons),
                        ]
                    })
                    .collect();
                out.push_str(&render_table(
                    &[
                        "d",
                        "A",
                        "status",
                        "certificate",
                        "k",
                        "(K+(d-1)A)^2",
                        "reasons",
                    ],
                    &rows,
                ));
            }
            out.push_str(&format!("SW: {}\n", r.sw.statement));
            if r.sw.applicable {
                out.push_str(&format!("SW c1 = -K + 2B: {}\n", class_text(&r.sw.c1)));
            }
        }
        ReportResults::Search(r) => {
            out.push_str(&format!("obstructed pairs: {}\n", r.count));
            if !r.hits.is_empty() {
                let rows: Vec<Vec<String>> = r
                    .hits
                    .iter()
                    .map(|h| {
                        vec![
                            class_text(&h.a),
                            h.d.to_string(),
                            certificate_text(&h.verdict),
                            k_text(&h.verdict),
                            h.verdict.k_base_sq.to_string(),
                        ]
                    })
                    .collect();
                out.push_str(&render_table(
                    &["A", "d", "certificate", "k", "(K+(d-1)A)^2"],
                    &rows,
                ));
            }
        }
    }
    for w in &report.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

/// Canonical JSON: keys sorted (via `serde_json::Value`'s ordered map), so
/// reparsing and re-serializing with any JSON tool is byte-identical.
pub fn render_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_lossless_and_byte_identical() {
        let m = Manifold4::k3();
        let report = Report {
            command: "invariants".into(),
            input_echo: InputEcho::manifold_only(&m),
            results: ReportResults::Invariants(invariants_result(&m).unwrap()),
            warnings: vec![],
        };
        let json = render_json(&report);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(render_json(&back), json);
    }

    #[test]
    fn obstruct_report_round_trip() {
        let m = Manifold4::k3().blow_up();
        let b = m.exceptional_class().scaled(2).unwrap();
        let check = symsurf::obstruction::check_class(&m, &b).unwrap();
        let sw = symsurf::obstruction::sw_vanishing_report(&m, &b, &check).unwrap();
        let report = Report {
            command: "obstruct".into(),
            input_echo: InputEcho {
                class: Some(b.coeffs().to_vec()),
                ..InputEcho::manifold_only(&m)
            },
            results: ReportResults::Obstruct(obstruct_result(&m, &b, check, sw).unwrap()),
            warnings: vec![],
        };
        let json = render_json(&report);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(render_json(&back), json);
        assert!(json.contains("\"OBSTRUCTED\""));
        let text = render_text(&report);
        assert!(text.contains("status: OBSTRUCTED"));
    }

    #[test]
    fn cover_and_search_reports_round_trip() {
        let m = Manifold4::k3();
        let mut v = vec![0i64; 22];
        v[0] = 1;
        v[1] = -1;
        let a = HClass::new(v);
        let cover = symsurf::cover::invariants(&m, &a, 3).unwrap();
        let report = Report {
            command: "cover".into(),
            input_echo: InputEcho {
                class: Some(a.coeffs().to_vec()),
                divisor: Some(3),
                ..InputEcho::manifold_only(&m)
            },
            results: ReportResults::Cover(cover),
            warnings: vec![],
        };
        let json = render_json(&report);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(render_json(&back), json);

        let hits = symsurf::obstruction::search(&m, &[0, 1], 1, 3).unwrap();
        let report = Report {
            command: "search".into(),
            input_echo: InputEcho {
                indices: Some(vec![0, 1]),
                bound: Some(1),
                dmax: Some(3),
                ..InputEcho::manifold_only(&m)
            },
            results: ReportResults::Search(SearchResult {
                count: hits.len(),
                hits,
            }),
            warnings: vec![],
        };
        let json = render_json(&report);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(render_json(&back), json);
    }

    #[test]
    fn table_alignment() {
        let t = render_table(
            &["a", "bb"],
            &[
                vec!["xxx".into(), "y".into()],
                vec!["z".into(), "wwww".into()],
            ],
        );
        assert_eq!(t, "a    bb\nxxx  y\nz    wwww\n");
    }
}
