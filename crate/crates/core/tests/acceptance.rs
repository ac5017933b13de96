//! Acceptance run: one line per criterion, exit status 1 if any fails.

#[path = "support/gl11.rs"]
mod gl11;

use std::sync::Arc;
use std::time::{Duration, Instant};
use tiltbench::characters::{
    decomposition_matrix, even_character, kac_character, tilting_table, verify_bgg, verify_orthogonality, Window,
};
use tiltbench::cli;
use tiltbench::module::{
    certify_tilting, check_complex, dual_module, is_isomorphic, kac_module, projective_cover, simple_module, tau_dual,
    tilting_module, verify_kdual, verify_pdual, IsoOptions, Workbench,
};
use tiltbench::superalgebra::{
    build_q, gl_graded, standard_gamma, validate_algebra, verify_semiinfinite, AlgebraCharacter, GradingKind,
    LieSuperAlgebra,
};

type Check = Result<String, String>;

fn gl(m: usize, n: usize) -> Arc<LieSuperAlgebra> {
    Arc::new(gl_graded(m, n, GradingKind::Compatible).unwrap())
}

fn all_algebras() -> Vec<LieSuperAlgebra> {
    let mut out = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            for kind in [GradingKind::Principal, GradingKind::Compatible] {
                out.push(gl_graded(m, n, kind).unwrap());
            }
        }
    }
    for n in 1..=3 {
        out.push(build_q(n).unwrap());
    }
    out
}

fn name(g: &LieSuperAlgebra) -> String {
    serde_json::to_string(&g.descriptor()).unwrap()
}

fn criterion_1() -> Check {
    let algs = all_algebras();
    for g in &algs {
        let gamma = AlgebraCharacter::from_weight(g, &standard_gamma(g).unwrap()).unwrap();
        let r = verify_semiinfinite(g, &gamma).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{}: {} defects", name(g), r.defects.len()));
        }
    }
    Ok(format!("{} algebras, no defects", algs.len()))
}

fn criterion_2() -> Check {
    let algs = all_algebras();
    for g in &algs {
        let r = validate_algebra(g);
        if !r.all_passed() {
            return Err(format!("{}: {:?}", name(g), r.failures().map(|c| &c.name).collect::<Vec<_>>()));
        }
    }
    Ok(format!("{} algebras validated", algs.len()))
}

fn criterion_3() -> Check {
    let mut pairs = 0;
    for (m, n) in [(1, 1), (2, 1)] {
        let g = gl(m, n);
        let wb = Workbench::with_defaults(g.clone());
        let r = verify_orthogonality(&wb, &Window::from_box(&g, -2, 2)).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("gl({m}|{n}): {:?}", &r.failures[..r.failures.len().min(3)]));
        }
        pairs += r.pairs_checked;
    }
    Ok(format!("{pairs} pairs"))
}

fn criterion_4() -> Check {
    let mut rows = 0;
    for (m, n, lo, hi) in [(1, 1, -3, 3), (2, 1, -1, 1)] {
        let g = gl(m, n);
        let wb = Workbench::with_defaults(g.clone());
        let win = Window::from_box(&g, lo, hi);
        let r = verify_bgg(&wb, &win, &win.widened(&g, 2)).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("gl({m}|{n}): {:?}", r.composition.mismatches));
        }
        if !r.excluded.is_empty() {
            return Err(format!("gl({m}|{n}): window not closed at {:?}", r.excluded));
        }
        rows += r.composition.rows.len();
    }
    Ok(format!("{rows} projective covers, Cartan matrices equal"))
}

fn criterion_5() -> Check {
    let g = gl(1, 1);
    let wb = Workbench::with_defaults(g.clone());
    let win = Window::from_box(&g, -2, 2);
    let wide = win.widened(&g, 2);
    let mut flipped = 0;
    for lam in win.list() {
        let label = g.weight_label(&lam);
        let k = verify_kdual(&wb, &lam).map_err(|e| e.to_string())?;
        if !k.holds {
            return Err(format!("K-duality fails at {label}"));
        }
        let p = verify_pdual(&wb, &lam, &wide.weights).map_err(|e| format!("{label}: {e}"))?;
        if !p.holds {
            return Err(format!("P-duality fails at {label}"));
        }
        flipped += p.iso.parity_flipped.unwrap_or(false) as usize;
        let t = tilting_module(&wb, &lam, &wide.weights).map_err(|e| e.to_string())?;
        let cert = certify_tilting(&wb, &lam, &t).map_err(|e| e.to_string())?;
        if !cert.holds() {
            return Err(format!("T({label}) not certified: {cert:?}"));
        }
    }
    Ok(format!("{} weights, {flipped} P-dualities need a parity flip", win.weights.len()))
}

fn criterion_6() -> Check {
    let mut out = Vec::new();
    for (m, n, lo, hi) in [(1, 1, -2, 2), (2, 1, -1, 1)] {
        let g = gl(m, n);
        let wb = Workbench::with_defaults(g.clone());
        let win = Window::from_box(&g, lo, hi);
        let r = tilting_table(&wb, &win, &win.widened(&g, 2)).map_err(|e| e.to_string())?;
        if !r.table.passed() {
            return Err(format!("gl({m}|{n}): {:?}", r.table.mismatches));
        }
        if !r.excluded.is_empty() {
            return Err(format!("gl({m}|{n}): excluded {:?}", r.excluded));
        }
        let atypical = r.table.lhs.iter().filter(|row| row.iter().sum::<u64>() > 1).count();
        if atypical == 0 {
            return Err(format!("gl({m}|{n}): no atypical tilting module in the window"));
        }
        out.push(format!("gl({m}|{n}) {} rows, {atypical} atypical", r.table.rows.len()));
    }
    Ok(out.join("; "))
}

fn criterion_7() -> Check {
    let actual = gl11::summary()?;
    let want = std::fs::read_to_string(gl11::golden_path("gl11_structure.json")).map_err(|e| e.to_string())?;
    if actual != want {
        return Err("differs from the committed golden file".into());
    }
    Ok("matches golden file and Gram oracle".into())
}

fn criterion_8() -> Check {
    let mut modules = 0;
    let iso = IsoOptions::default();
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let g = gl(m, n);
        let wb = Workbench::with_defaults(g.clone());
        let win = Window::from_box(&g, -1, 1);
        let wide = win.widened(&g, 2);
        for lam in win.list() {
            let label = g.weight_label(&lam);
            let k = kac_module(&g, &lam).map_err(|e| e.to_string())?;
            let d = dual_module(&k).map_err(|e| e.to_string())?;
            let t = tau_dual(&k).map_err(|e| e.to_string())?;
            let mut built = vec![k.clone(), d.clone(), t.clone(), simple_module(&g, &lam).map_err(|e| e.to_string())?];
            if m + n == 2 {
                built.push(tilting_module(&wb, &lam, &wide.weights).map_err(|e| e.to_string())?.module);
                built.push(projective_cover(&wb, &lam, &wide.weights).map_err(|e| e.to_string())?.module);
            }
            for x in &built {
                x.check_axioms().map_err(|e| format!("axiom at {label}: {e}"))?;
                modules += 1;
            }
            if !is_isomorphic(&dual_module(&d).unwrap(), &k, &iso).is_found() {
                return Err(format!("double dual at {label}"));
            }
            if !is_isomorphic(&tau_dual(&t).unwrap(), &k, &iso).is_found() {
                return Err(format!("double tau-dual at {label}"));
            }
            let mass = kac_character(&g, &lam).unwrap().mass();
            if mass != (1u64 << (m * n)) * even_character(&g, &lam).unwrap().mass() {
                return Err(format!("character mass at {label}"));
            }
            for mu in win.list() {
                let target = tau_dual(&kac_module(&g, &mu).unwrap()).unwrap();
                if !check_complex(&wb, &lam, &target).map_err(|e| e.to_string())? {
                    return Err(format!("d^2 != 0 at ({label}, {})", g.weight_label(&mu)));
                }
            }
        }
        if !decomposition_matrix(&wb, &win).map_err(|e| e.to_string())?.is_unitriangular(&g) {
            return Err(format!("gl({m}|{n}) decomposition matrix not unitriangular"));
        }
    }
    let args = ["tiltbench", "verify", "--algebra", "gl:2,1", "--box=-1..1", "--seed", "5"];
    let a = cli::run(args);
    let b = cli::run(args);
    if a.code != 0 || a.stdout != b.stdout {
        return Err("verify output not reproducible".into());
    }
    Ok(format!("{modules} modules checked; outputs reproducible"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<u64>); 8] = [
        ("semi-infinite characters", criterion_1, Some(5)),
        ("algebra validation", criterion_2, Some(5)),
        ("Hom/Ext orthogonality", criterion_3, Some(120)),
        ("BGG reciprocity", criterion_4, Some(600)),
        ("duality suite", criterion_5, Some(600)),
        ("tilting multiplicities", criterion_6, Some(900)),
        ("gl(1|1) structure", criterion_7, None),
        ("property suites", criterion_8, None),
    ];
    let mut failed = 0;
    for (i, (title, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let over = limit.is_some_and(|s| took > Duration::from_secs(s));
        let limit_text = limit.map(|s| format!(", limit {s}s")).unwrap_or_default();
        let (ok, detail) = match &res {
            Ok(d) if !over => (true, d.clone()),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(e) => (false, e.clone()),
        };
        failed += !ok as usize;
        println!(
            "criterion {}: {} - {title}: {detail} ({:.2}s{limit_text})",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
