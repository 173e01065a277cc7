use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superpoint_core::derham::{cohomology_dims_with_cap, DEFAULT_BLOCK_CAP};
use superpoint_core::monomial::MAX_RANK;
use superpoint_core::syntax::{
    infer_map_rank, parse_derivation, parse_element, parse_endo, parse_form, parse_hom, parse_point,
    parse_superfunction, print_element, print_form, print_hom, print_line, print_point,
    print_superfunction,
};
use superpoint_core::{
    act_at, antiderivative, classes_equal, cohomology_dims_homotopy, eval_superfunction,
    graded_derivation_apply, induced_point_map, j_family, lemma1_epi, normalize_class, verify_hom,
    Error, GradedMap, GrassmannElement, SubalgebraBasis, SuperDomainSpec,
};

#[derive(Parser)]
#[command(name = "superpoint", version, about = "Exact Grassmann algebra and super de Rham calculator")]
struct Cli {
    /// Emit JSON instead of canonical text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Rank {
    /// Rank q of the Grassmann algebra.
    #[arg(short = 'q', long = "rank", allow_negative_numbers = true)]
    q: i64,
}

#[derive(Args)]
struct Dims {
    /// Superdomain dimensions `M,N`.
    #[arg(long)]
    dims: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Element,
    Superfunction,
    Form,
    Hom,
    Endo,
    Point,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Elimination,
    Homotopy,
    Both,
}

#[derive(Subcommand)]
enum Verb {
    /// Product of elements, left to right.
    Mul {
        #[command(flatten)]
        rank: Rank,
        #[arg(required = true, num_args = 1..)]
        factors: Vec<String>,
    },
    /// Body (constant term) of an element.
    Body {
        #[command(flatten)]
        rank: Rank,
        element: String,
    },
    Invert {
        #[command(flatten)]
        rank: Rank,
        element: String,
    },
    /// Applies the homomorphism `--map` from rank q to rank p.
    HomApply {
        #[command(flatten)]
        rank: Rank,
        #[arg(short = 'p', long = "target-rank", allow_negative_numbers = true)]
        p: Option<i64>,
        #[arg(long)]
        map: String,
        element: String,
    },
    /// Prints `then ∘ map`.
    HomCompose {
        #[command(flatten)]
        rank: Rank,
        #[arg(short = 'p', long = "target-rank", allow_negative_numbers = true)]
        p: Option<i64>,
        #[arg(long)]
        map: String,
        /// Source rank of `--then`; defaults to the target rank of `--map`.
        #[arg(long = "then-source", allow_negative_numbers = true)]
        then_source: Option<i64>,
        #[arg(long = "then-target", allow_negative_numbers = true)]
        then_target: Option<i64>,
        #[arg(long)]
        then: String,
    },
    /// Epimorphism onto ∧(1) of the subalgebra generated by `--gens`.
    Lemma1 {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        gens: String,
    },
    /// The homomorphism j_λ on the subalgebra generated by `--gens`.
    Jfamily {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        gens: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Element to map; all basis images are listed when omitted.
        element: Option<String>,
    },
    /// Evaluates a superfunction at a q-point.
    PointEval {
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        point: String,
        function: String,
    },
    /// Pushes a q-point forward along `--map`.
    PointMap {
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        rank: Rank,
        #[arg(short = 'p', long = "target-rank", allow_negative_numbers = true)]
        p: Option<i64>,
        #[arg(long)]
        map: String,
        #[arg(long)]
        point: String,
    },
    /// Action of the endomorphism `--map` on the class of `--point`.
    Eact {
        #[command(flatten)]
        dims: Dims,
        /// Rank of the given representative; inferred when omitted.
        #[arg(short = 'q', long = "rank", allow_negative_numbers = true)]
        q: Option<i64>,
        /// Range rank of the endomorphism; inferred when omitted.
        #[arg(short = 'j', long = "range-rank", allow_negative_numbers = true)]
        j: Option<i64>,
        /// Rank of the algebra the action is computed through.
        #[arg(long = "through", allow_negative_numbers = true)]
        through: Option<i64>,
        #[arg(long)]
        map: String,
        #[arg(long)]
        point: String,
    },
    /// Compares two classes in the direct limit.
    ClassEq {
        #[command(flatten)]
        dims: Dims,
        /// Domain of the second point; defaults to `--dims`.
        #[arg(long)]
        dims2: Option<String>,
        first: String,
        second: String,
    },
    DerhamD {
        #[command(flatten)]
        dims: Dims,
        form: String,
    },
    DerhamAntider {
        #[command(flatten)]
        dims: Dims,
        form: String,
    },
    DerhamCohomology {
        #[command(flatten)]
        dims: Dims,
        #[arg(long = "max-degree")]
        max_degree: usize,
        #[arg(long = "max-weight")]
        max_weight: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        /// Largest block the elimination is allowed to build.
        #[arg(long, default_value_t = DEFAULT_BLOCK_CAP)]
        cap: usize,
    },
    /// Applies the graded derivation given by `--on` to a function.
    DerhamDerive {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        parity: u8,
        #[arg(long)]
        on: String,
        function: String,
    },
    /// Parses a value and prints it canonically.
    ParseCheck {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'q', long = "rank", allow_negative_numbers = true)]
        q: Option<i64>,
        #[arg(short = 'p', long = "target-rank", allow_negative_numbers = true)]
        p: Option<i64>,
        #[arg(long)]
        dims: Option<String>,
        text: String,
    },
}

/// Errors while reading input exit with 2, errors from the kernel with 1.
enum Failure {
    Usage(Error),
    Domain(Error),
}

type Run<T> = std::result::Result<T, Failure>;

trait Stage<T> {
    fn usage(self) -> Run<T>;
    fn domain(self) -> Run<T>;
}

impl<T> Stage<T> for superpoint_core::Result<T> {
    fn usage(self) -> Run<T> {
        self.map_err(Failure::Usage)
    }

    fn domain(self) -> Run<T> {
        self.map_err(Failure::Domain)
    }
}

fn rank(v: i64) -> Run<usize> {
    if v < 0 {
        return Err(Failure::Usage(Error::NonCanonicalRank(v)));
    }
    let v = v as usize;
    if v > MAX_RANK {
        return Err(Failure::Usage(Error::RankTooLarge(v)));
    }
    Ok(v)
}

fn dims(text: &str) -> Run<SuperDomainSpec> {
    let bad = || {
        Failure::Usage(Error::ParseError {
            position: 0,
            message: format!("expected `M,N`, got `{text}`"),
        })
    };
    let (m, n) = text.split_once(',').ok_or_else(bad)?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    Ok(SuperDomainSpec::new(m, n))
}

fn element(text: &str, q: usize) -> Run<GrassmannElement> {
    parse_element(text, q).usage()
}

fn gens(text: &str, q: usize) -> Run<Vec<GrassmannElement>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| element(s, q))
        .collect()
}

fn target_rank(explicit: Option<i64>, map: &str) -> Run<usize> {
    match explicit {
        Some(p) => rank(p),
        None => rank(infer_map_rank(map).usage()? as i64),
    }
}

fn lambda(text: &str) -> Run<superpoint_core::Scalar> {
    text.parse().map_err(|e: superpoint_core::scalar::ParseScalarError| {
        Failure::Usage(Error::ParseError {
            position: 0,
            message: e.to_string(),
        })
    })
}

enum Output {
    Text(String),
    Json(String),
}

fn emit<T: serde::Serialize>(json: bool, text: String, value: &T) -> Output {
    if json {
        Output::Json(serde_json::to_string(value).expect("kernel values serialize"))
    } else {
        Output::Text(text)
    }
}

fn emit_value(v: Value) -> Output {
    Output::Json(v.to_string())
}

fn point_rank(explicit: Option<i64>, point: &str) -> Run<usize> {
    match explicit {
        Some(q) => rank(q),
        None => rank(infer_map_rank(point).usage()? as i64),
    }
}

fn run(cli: Cli) -> Run<Output> {
    let json = cli.json;
    Ok(match cli.verb {
        Verb::Mul { rank: r, factors } => {
            let q = rank(r.q)?;
            let parsed = factors.iter().map(|f| element(f, q)).collect::<Run<Vec<_>>>()?;
            let mut acc = GrassmannElement::one(q);
            for f in &parsed {
                acc = acc.mul(f).domain()?;
            }
            emit(json, print_element(&acc), &acc)
        }
        Verb::Body { rank: r, element: e } => {
            let a = element(&e, rank(r.q)?)?;
            let b = a.body();
            emit(json, b.to_string(), &b)
        }
        Verb::Invert { rank: r, element: e } => {
            let a = element(&e, rank(r.q)?)?;
            let inv = a.invert().domain()?;
            emit(json, print_element(&inv), &inv)
        }
        Verb::HomApply { rank: r, p, map, element: e } => {
            let q = rank(r.q)?;
            let p = target_rank(p, &map)?;
            let phi = parse_hom(&map, q, p).usage()?;
            let a = element(&e, q)?;
            let out = phi.apply(&a).domain()?;
            emit(json, print_element(&out), &out)
        }
        Verb::HomCompose {
            rank: r,
            p,
            map,
            then_source,
            then_target,
            then,
        } => {
            let q = rank(r.q)?;
            let p = target_rank(p, &map)?;
            let phi = parse_hom(&map, q, p).usage()?;
            let s = match then_source {
                Some(s) => rank(s)?,
                None => p,
            };
            let t = target_rank(then_target, &then)?;
            let psi = parse_hom(&then, s, t).usage()?;
            let out = psi.compose(&phi).domain()?;
            emit(json, print_hom(&out), &out)
        }
        Verb::Lemma1 { rank: r, gens: g } => {
            let q = rank(r.q)?;
            let generators = gens(&g, q)?;
            let a = SubalgebraBasis::closure(q, &generators).domain()?;
            let h = lemma1_epi(&a).domain()?;
            let report = verify_hom(&h, a.basis()).domain()?;
            let beta: Vec<usize> = h.beta().indices().collect();
            let verified = report.is_clean() && report.surjective;
            if json {
                emit_value(json!({
                    "dim": a.dim(),
                    "m": h.m(),
                    "beta": beta,
                    "verified": verified,
                    "report": report,
                }))
            } else {
                let beta_text = beta.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
                Output::Text(format!(
                    "dim={}\nm={}\nbeta={{{}}}\nh verified={}",
                    a.dim(),
                    h.m(),
                    beta_text,
                    verified
                ))
            }
        }
        Verb::Jfamily {
            rank: r,
            gens: g,
            lambda: l,
            element: e,
        } => {
            let q = rank(r.q)?;
            let generators = gens(&g, q)?;
            let l = lambda(&l)?;
            let z = e.map(|e| element(&e, q)).transpose()?;
            let a = SubalgebraBasis::closure(q, &generators).domain()?;
            let h = lemma1_epi(&a).domain()?;
            let j = j_family(&h, &a, l).domain()?;
            match z {
                Some(z) => {
                    if !a.contains(&z) {
                        return Err(Failure::Usage(Error::ParseError {
                            position: 0,
                            message: "element does not lie in the generated subalgebra".into(),
                        }));
                    }
                    let out = j.apply(&z).domain()?;
                    emit(json, print_line(&out), &out)
                }
                None => {
                    let report = verify_hom(&j, a.basis()).domain()?;
                    let images = j.basis_images().domain()?;
                    if json {
                        let pairs: Vec<Value> = a
                            .basis()
                            .iter()
                            .zip(&images)
                            .map(|(b, i)| json!({"basis": b, "image": i}))
                            .collect();
                        emit_value(json!({"images": pairs, "verified": report.is_clean()}))
                    } else {
                        let mut lines: Vec<String> = a
                            .basis()
                            .iter()
                            .zip(&images)
                            .map(|(b, i)| format!("{} -> {}", print_element(b), print_line(i)))
                            .collect();
                        lines.push(format!("verified={}", report.is_clean()));
                        Output::Text(lines.join("\n"))
                    }
                }
            }
        }
        Verb::PointEval {
            dims: d,
            rank: r,
            point,
            function,
        } => {
            let d = dims(&d.dims)?;
            let q = rank(r.q)?;
            let kappa = parse_point(&point, d, q).usage()?;
            let f = parse_superfunction(&function, d).usage()?;
            let out = eval_superfunction(&f, &kappa).domain()?;
            emit(json, print_element(&out), &out)
        }
        Verb::PointMap {
            dims: d,
            rank: r,
            p,
            map,
            point,
        } => {
            let d = dims(&d.dims)?;
            let q = rank(r.q)?;
            let p = target_rank(p, &map)?;
            let phi = parse_hom(&map, q, p).usage()?;
            let kappa = parse_point(&point, d, q).usage()?;
            let out = induced_point_map(&phi, &kappa).domain()?;
            emit(json, print_point(&out), &out)
        }
        Verb::Eact {
            dims: d,
            q,
            j,
            through,
            map,
            point,
        } => {
            let d = dims(&d.dims)?;
            let q = point_rank(q, &point)?;
            let j = target_rank(j, &map)?;
            let g = parse_endo(&map, j).usage()?;
            let kappa = parse_point(&point, d, q).usage()?;
            let c = normalize_class(&kappa, d).domain()?;
            let through = match through {
                Some(t) => rank(t)?,
                None => j,
            };
            let out = act_at(&g, &c, through).domain()?;
            emit(json, print_point(out.representative()), &out)
        }
        Verb::ClassEq {
            dims: d,
            dims2,
            first,
            second,
        } => {
            let d1 = dims(&d.dims)?;
            let d2 = match dims2 {
                Some(t) => dims(&t)?,
                None => d1,
            };
            let q1 = point_rank(None, &first)?;
            let q2 = point_rank(None, &second)?;
            let a = parse_point(&first, d1, q1).usage()?;
            let b = parse_point(&second, d2, q2).usage()?;
            let ca = normalize_class(&a, d1).domain()?;
            let cb = normalize_class(&b, d2).domain()?;
            let eq = classes_equal(&ca, &cb).domain()?;
            emit(json, eq.to_string(), &eq)
        }
        Verb::DerhamD { dims: d, form } => {
            let w = parse_form(&form, dims(&d.dims)?).usage()?;
            let out = w.d();
            emit(json, print_form(&out), &out)
        }
        Verb::DerhamAntider { dims: d, form } => {
            let w = parse_form(&form, dims(&d.dims)?).usage()?;
            let out = antiderivative(&w).domain()?;
            emit(json, print_form(&out), &out)
        }
        Verb::DerhamCohomology {
            dims: d,
            max_degree,
            max_weight,
            method,
            cap,
        } => {
            let d = dims(&d.dims)?;
            let (m, n) = (d.even_dim, d.odd_dim);
            let h = match method {
                Method::Elimination => cohomology_dims_with_cap(m, n, max_degree, max_weight, cap).domain()?,
                Method::Homotopy => cohomology_dims_homotopy(m, n, max_degree, max_weight).domain()?,
                Method::Both => {
                    let a = cohomology_dims_with_cap(m, n, max_degree, max_weight, cap).domain()?;
                    let b = cohomology_dims_homotopy(m, n, max_degree, max_weight).domain()?;
                    if a != b {
                        return Err(Failure::Domain(Error::VerificationFailed(format!(
                            "elimination gives {a:?}, homotopy gives {b:?}"
                        ))));
                    }
                    a
                }
            };
            let text = h
                .iter()
                .enumerate()
                .map(|(p, k)| format!("H^{p}={k}"))
                .collect::<Vec<_>>()
                .join("\n");
            emit(json, text, &h)
        }
        Verb::DerhamDerive {
            dims: d,
            parity,
            on,
            function,
        } => {
            let d = dims(&d.dims)?;
            let f = parse_form(&function, d).usage()?;
            let dd = parse_derivation(&on, parity, d).domain()?;
            let out = graded_derivation_apply(&dd, &f).domain()?;
            emit(json, print_form(&out), &out)
        }
        Verb::ParseCheck { kind, q, p, dims: d, text } => {
            let need_rank = |q: Option<i64>| -> Run<usize> {
                rank(q.ok_or_else(|| {
                    Failure::Usage(Error::ParseError {
                        position: 0,
                        message: "this kind needs -q".into(),
                    })
                })?)
            };
            let need_dims = |d: &Option<String>| -> Run<SuperDomainSpec> {
                dims(d.as_deref().ok_or_else(|| {
                    Failure::Usage(Error::ParseError {
                        position: 0,
                        message: "this kind needs --dims".into(),
                    })
                })?)
            };
            match kind {
                Kind::Element => {
                    let a = element(&text, need_rank(q)?)?;
                    emit(json, print_element(&a), &a)
                }
                Kind::Superfunction => {
                    let f = parse_superfunction(&text, need_dims(&d)?).usage()?;
                    emit(json, print_superfunction(&f), &f)
                }
                Kind::Form => {
                    let w = parse_form(&text, need_dims(&d)?).usage()?;
                    emit(json, print_form(&w), &w)
                }
                Kind::Hom => {
                    let q = need_rank(q)?;
                    let p = target_rank(p, &text)?;
                    let phi = parse_hom(&text, q, p).usage()?;
                    emit(json, print_hom(&phi), &phi)
                }
                Kind::Endo => {
                    let j = target_rank(p, &text)?;
                    let g = parse_endo(&text, j).usage()?;
                    emit(json, g.to_string(), &g)
                }
                Kind::Point => {
                    let d = need_dims(&d)?;
                    let q = point_rank(q, &text)?;
                    let kappa = parse_point(&text, d, q).usage()?;
                    emit(json, print_point(&kappa), &kappa)
                }
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Output::Text(t) | Output::Json(t)) => {
            println!("{t}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, e) = match f {
                Failure::Usage(e) => (2, e),
                Failure::Domain(e) => (1, e),
            };
            eprintln!("error: {}: {}", e.name(), e);
            ExitCode::from(code)
        }
    }
}
