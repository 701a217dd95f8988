use std::path::Path;

use noneuclid::crochet::{stitch_schedule, CrochetSpec, Gauge};
use noneuclid::disk::{geodesic_through, hyperbolic_circle, parallels_through, DiskGeodesic, DiskPoint, DiskTriangle};
use noneuclid::fold::{make_annulus_template, Spacing};
use noneuclid::render::{render_disk, render_fold, render_net, render_sphere, DiskFigure};
use noneuclid::report::{
    crochet_report, disk_circle_report, disk_parallels_report, disk_triangle_report, fold_report, geometry_report,
    sphere_intersect_report, sphere_triangle_report, tiling_report, to_json,
};
use noneuclid::sphere::{SpherePoint, SphericalTriangle};
use noneuclid::tiling::{generate_patch, unfold_net_with_tabs, Strategy, VertexConfig};
use noneuclid::{Curvature, Vec2};

use crate::config::{self, positive_pair, RenderConfig};
use crate::{
    Cli, CliError, Command, CrochetArgs, DiskCommand, FoldArgs, GeometryArgs, SphereCommand, TextOut, TilingArgs,
};

type Meta = Vec<(String, String)>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn write(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Internal(format!("cannot write to standard output: {e}")))
        }
    }
}

fn emit_text(out: &TextOut, text: String, json: String) -> Result<(), CliError> {
    write(out.out.as_deref(), if out.json { &json } else { &text })
}

/// Parses `A,B` or `A,B,C` into numbers.
fn numbers(s: &str, want: &[usize], what: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("{what} must be comma-separated numbers, got {s:?}")))?;
    if !want.contains(&parts.len()) || parts.iter().any(|x| !x.is_finite()) {
        return Err(usage(format!("{what} has the wrong number of components: {s:?}")));
    }
    Ok(parts)
}

fn vec2(s: &str, what: &str) -> Result<Vec2, CliError> {
    let v = numbers(s, &[2], what)?;
    Ok(Vec2::new(v[0], v[1]))
}

fn disk_point(s: &str) -> Result<DiskPoint, CliError> {
    let v = vec2(s, "disk point")?;
    Ok(DiskPoint::new(v.x, v.y)?)
}

/// `LAT,LON` in degrees, or `X,Y,Z`.
fn sphere_point(s: &str) -> Result<SpherePoint, CliError> {
    let v = numbers(s, &[2, 3], "sphere point")?;
    Ok(match v.len() {
        2 => SpherePoint::from_lat_lon_deg(v[0], v[1])?,
        _ => SpherePoint::from_xyz(v[0], v[1], v[2])?,
    })
}

fn settings(cli: &Cli) -> Result<RenderConfig, CliError> {
    let mut cfg = config::load(cli.config_file.as_deref()).map_err(usage)?;
    if let Some(p) = &cli.page {
        cfg.set("page", p).map_err(usage)?;
    }
    if let Some(m) = cli.margin_mm {
        cfg.set("margin_mm", &m.to_string()).map_err(usage)?;
    }
    for s in &cli.strokes {
        let (class, w) = s
            .split_once('=')
            .ok_or_else(|| usage(format!("--stroke expects CLASS=MM, got {s:?}")))?;
        cfg.set(&format!("stroke_{}", class.trim()), w).map_err(usage)?;
    }
    cfg.validate().map_err(usage)?;
    Ok(cfg)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = settings(&cli)?;
    match cli.command {
        Command::Geometry(a) => geometry(a),
        Command::Sphere(c) => sphere(c, &cfg),
        Command::Disk(c) => disk(c, &cfg),
        Command::Tiling(a) => tiling(a, &cfg),
        Command::Fold(a) => fold(a, &cfg),
        Command::Crochet(a) => crochet(a, &cfg),
    }
}

fn geometry(a: GeometryArgs) -> Result<(), CliError> {
    let r = geometry_report(Curvature::new(a.curvature)?, a.radius, a.area)?;
    emit_text(&a.output, r.to_text(), to_json(&r))
}

fn sphere(c: SphereCommand, cfg: &RenderConfig) -> Result<(), CliError> {
    match c {
        SphereCommand::Triangle { points, svg, output } => {
            let p: Vec<SpherePoint> = points.iter().map(|s| sphere_point(s)).collect::<Result<_, _>>()?;
            let t = SphericalTriangle::new(p[0], p[1], p[2])?;
            let r = sphere_triangle_report(&t)?;
            if let Some(path) = svg {
                let meta: Meta = vec![("points".into(), points.join(" "))];
                write(Some(&path), &render_sphere(&t, &cfg.style, &meta))?;
            }
            emit_text(&output, r.to_text(), to_json(&r))
        }
        SphereCommand::Intersect { first, second, output } => {
            let f = [sphere_point(&first[0])?, sphere_point(&first[1])?];
            let s = [sphere_point(&second[0])?, sphere_point(&second[1])?];
            let r = sphere_intersect_report(f, s)?;
            emit_text(&output, r.to_text(), to_json(&r))
        }
    }
}

/// A line given by two interior points, or by two ideal endpoints on the
/// boundary circle.
fn disk_line(a: &str, b: &str) -> Result<DiskGeodesic, CliError> {
    let (p, q) = (vec2(a, "line point")?, vec2(b, "line point")?);
    let on_boundary = |v: Vec2| (v.norm() - 1.0).abs() <= 1e-9;
    if on_boundary(p) && on_boundary(q) {
        return Ok(DiskGeodesic::from_ideal_endpoints(p.normalized(), q.normalized())?);
    }
    Ok(geodesic_through(DiskPoint::new(p.x, p.y)?, DiskPoint::new(q.x, q.y)?)?)
}

fn disk(c: DiskCommand, cfg: &RenderConfig) -> Result<(), CliError> {
    match c {
        DiskCommand::Triangle { points, output } => {
            let p: Vec<DiskPoint> = points.iter().map(|s| disk_point(s)).collect::<Result<_, _>>()?;
            let t = DiskTriangle::new(p[0], p[1], p[2])?;
            let r = disk_triangle_report(&t)?;
            let meta: Meta = vec![
                ("figure".into(), "triangle".into()),
                ("points".into(), points.join(" ")),
            ];
            write(
                Some(&output.out),
                &render_disk(&DiskFigure::Triangle(&t), &cfg.style, &meta),
            )?;
            if let Some(path) = &output.report {
                write(Some(path), &to_json(&r))?;
            }
            eprintln!("{}", r.summary());
            Ok(())
        }
        DiskCommand::Parallels {
            line,
            point,
            count,
            output,
        } => {
            let g = disk_line(&line[0], &line[1])?;
            let p = disk_point(&point)?;
            let ps = parallels_through(&g, p, count)?;
            let r = disk_parallels_report(&g, p, &ps)?;
            let meta: Meta = vec![
                ("figure".into(), "parallels".into()),
                ("line".into(), line.join(" ")),
                ("point".into(), point.clone()),
                ("count".into(), count.to_string()),
            ];
            let fig = DiskFigure::Parallels {
                line: &g,
                point: p,
                parallels: &ps,
            };
            write(Some(&output.out), &render_disk(&fig, &cfg.style, &meta))?;
            if let Some(path) = &output.report {
                write(Some(path), &to_json(&r))?;
            }
            Ok(())
        }
        DiskCommand::Circle { center, radius, output } => {
            let c = hyperbolic_circle(disk_point(&center)?, radius)?;
            let meta: Meta = vec![
                ("figure".into(), "circle".into()),
                ("center".into(), center.clone()),
                ("radius".into(), radius.to_string()),
            ];
            write(
                Some(&output.out),
                &render_disk(&DiskFigure::Circle(&c), &cfg.style, &meta),
            )?;
            if let Some(path) = &output.report {
                write(Some(path), &to_json(&disk_circle_report(&c)))?;
            }
            Ok(())
        }
    }
}

fn tiling(a: TilingArgs, cfg: &RenderConfig) -> Result<(), CliError> {
    let config: VertexConfig = a.config.parse()?;
    let strategy: Strategy = a.strategy.parse()?;
    let edge = a.edge_mm.unwrap_or(cfg.edge_mm);
    let tab = a.tab_mm.unwrap_or(cfg.tab_depth_mm);
    let patch = generate_patch(&config, a.rings)?;
    let net = unfold_net_with_tabs(&patch, edge, strategy, tab)?;
    let r = tiling_report(&patch, &net)?;
    let meta: Meta = vec![
        ("config".into(), config.to_string()),
        ("rings".into(), a.rings.to_string()),
        ("edge_mm".into(), edge.to_string()),
        ("tab_depth_mm".into(), tab.to_string()),
        ("strategy".into(), strategy.to_string()),
        ("faces".into(), patch.face_count().to_string()),
        ("overlaps".into(), net.overlap_count().to_string()),
    ];
    write(Some(&a.out), &render_net(&net, &cfg.style, &meta))?;
    write(a.report.as_deref(), &to_json(&r))
}

fn fold(a: FoldArgs, cfg: &RenderConfig) -> Result<(), CliError> {
    let spacing: Spacing = a.spacing.parse()?;
    let t = make_annulus_template(a.inner, a.outer, a.creases, spacing)?;
    let r = fold_report(&t, spacing, a.fold_angle)?;
    let meta: Meta = vec![
        ("inner_mm".into(), a.inner.to_string()),
        ("outer_mm".into(), a.outer.to_string()),
        ("creases".into(), a.creases.to_string()),
        ("spacing".into(), spacing.to_string()),
        ("fold_angle_deg".into(), a.fold_angle.to_string()),
    ];
    write(Some(&a.out), &render_fold(&t, &cfg.style, &meta))?;
    write(a.report.as_deref(), &to_json(&r))
}

fn crochet(a: CrochetArgs, cfg: &RenderConfig) -> Result<(), CliError> {
    let gauge = match &a.gauge {
        Some(g) => {
            let (w, h) = positive_pair("--gauge", g).map_err(usage)?;
            Gauge {
                stitch_width_mm: w,
                row_height_mm: h,
            }
        }
        None => cfg.gauge,
    };
    let spec = CrochetSpec::new(a.foundation, a.ratio_n, a.rows, gauge)?;
    let r = crochet_report(&spec, &stitch_schedule(&spec)?);
    let json = to_json(&r);
    if let Some(path) = &a.report {
        write(Some(path), &json)?;
    }
    emit_text(&a.output, r.to_text(), json)
}
