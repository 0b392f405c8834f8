//! SVG images of concentric circles and radial segments under a map.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use num_complex::Complex64;
use thiserror::Error;

use crate::mappings::HarmonicMap;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlotError {
    #[error("invalid plot configuration: {0}")]
    InvalidConfig(&'static str),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotConfig {
    pub rings: usize,
    pub rays: usize,
    pub r_max: f64,
    pub samples_per_curve: usize,
    /// Points with `|w| > clip_radius` are dropped.
    pub clip_radius: f64,
    pub width_px: usize,
}

impl Default for PlotConfig {
    fn default() -> Self {
        Self {
            rings: 10,
            rays: 16,
            r_max: 0.99,
            samples_per_curve: 1000,
            clip_radius: 8.0,
            width_px: 800,
        }
    }
}

impl PlotConfig {
    pub fn validate(&self) -> Result<(), PlotError> {
        if self.rings < 1 {
            return Err(PlotError::InvalidConfig("rings must be at least 1"));
        }
        if self.rays < 1 {
            return Err(PlotError::InvalidConfig("rays must be at least 1"));
        }
        if !(self.r_max > 0.0 && self.r_max < 1.0) {
            return Err(PlotError::InvalidConfig("r_max must lie in (0, 1)"));
        }
        if self.samples_per_curve < 64 {
            return Err(PlotError::InvalidConfig("samples_per_curve must be at least 64"));
        }
        if !(self.clip_radius > 0.0) {
            return Err(PlotError::InvalidConfig("clip_radius must be positive"));
        }
        if self.width_px == 0 {
            return Err(PlotError::InvalidConfig("width_px must be positive"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ring,
    Ray,
}

/// One image curve, split into pieces where it leaves the clip disk.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub family: Family,
    pub segments: Vec<Vec<Complex64>>,
    pub clipped: bool,
}

fn clip(points: impl IntoIterator<Item = Complex64>, w: f64) -> (Vec<Vec<Complex64>>, bool) {
    let mut segments = vec![Vec::new()];
    let mut clipped = false;
    for p in points {
        if p.norm() <= w && p.re.is_finite() && p.im.is_finite() {
            segments.last_mut().expect("non-empty").push(p);
        } else {
            clipped = true;
            if !segments.last().expect("non-empty").is_empty() {
                segments.push(Vec::new());
            }
        }
    }
    segments.retain(|s| !s.is_empty());
    (segments, clipped)
}

/// Image curves of rings `r = k·r_max/rings` and rays `t = 2πj/rays`.
///
/// `f` should be truncated at an order adequate for `r_max`.
pub fn image_curves(f: &HarmonicMap<f64>, cfg: &PlotConfig) -> Result<Vec<Curve>, PlotError> {
    cfg.validate()?;
    let m = cfg.samples_per_curve;
    let mut curves = Vec::with_capacity(cfg.rings + cfg.rays);
    for k in 1..=cfg.rings {
        let r = cfg.r_max * k as f64 / cfg.rings as f64;
        let mut pts = f.eval_on_circle(r, m);
        pts.push(pts[0]);
        let (segments, clipped) = clip(pts, cfg.clip_radius);
        curves.push(Curve {
            family: Family::Ring,
            segments,
            clipped,
        });
    }
    let dh = f.h();
    let dg = f.g();
    for j in 0..cfg.rays {
        let t = TAU * j as f64 / cfg.rays as f64;
        let pts = (0..m).map(|i| {
            let z = Complex64::from_polar(cfg.r_max * i as f64 / (m - 1) as f64, t);
            dh.eval(z) + dg.eval(z).conj()
        });
        let (segments, clipped) = clip(pts, cfg.clip_radius);
        curves.push(Curve {
            family: Family::Ray,
            segments,
            clipped,
        });
    }
    Ok(curves)
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

/// Renders curves as SVG 1.1 in world coordinates (`x = Re w`, `y = -Im w`).
pub fn render_svg(curves: &[Curve], cfg: &PlotConfig, title: &str) -> String {
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in curves.iter().flat_map(|c| c.segments.iter().flatten()) {
        lo_x = lo_x.min(p.re);
        hi_x = hi_x.max(p.re);
        lo_y = lo_y.min(-p.im);
        hi_y = hi_y.max(-p.im);
    }
    if !lo_x.is_finite() {
        (lo_x, hi_x, lo_y, hi_y) = (-1.0, 1.0, -1.0, 1.0);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9) * 1.1;
    let (cx, cy) = ((lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0);
    let (vx, vy) = (cx - span / 2.0, cy - span / 2.0);
    let any_clipped = curves.iter().any(|c| c.clipped);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{w}\" viewBox=\"{} {} {} {}\">",
        num(vx),
        num(vy),
        num(span),
        num(span),
        w = cfg.width_px
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let stroke = num(span / 800.0);
    for (family, id, color) in [(Family::Ring, "rings", "#1f4e9c"), (Family::Ray, "rays", "#b5301f")] {
        let _ = writeln!(
            out,
            "<g id=\"{id}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{stroke}\">"
        );
        for c in curves.iter().filter(|c| c.family == family) {
            let mut d = String::new();
            for seg in &c.segments {
                for (k, p) in seg.iter().enumerate() {
                    let _ = write!(d, "{}{} {} ", if k == 0 { "M" } else { "L" }, num(p.re), num(-p.im));
                }
            }
            let _ = writeln!(
                out,
                "<path data-clipped=\"{}\" d=\"{}\"/>",
                c.clipped,
                d.trim_end()
            );
        }
        out.push_str("</g>\n");
    }
    if any_clipped {
        let _ = writeln!(
            out,
            "<g id=\"clip\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"{0} {0}\" stroke-width=\"{1}\"><circle cx=\"0.000000\" cy=\"0.000000\" r=\"{2}\"/></g>",
            num(span / 100.0),
            stroke,
            num(cfg.clip_radius)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Parses the `d` attributes of every `<path>` back into points.
pub fn path_points(svg: &str) -> Vec<Vec<Complex64>> {
    svg.split("<path ")
        .skip(1)
        .filter_map(|p| {
            let start = p.find("d=\"")? + 3;
            let end = start + p[start..].find('"')?;
            let nums: Vec<f64> = p[start..end]
                .split(|c: char| c == 'M' || c == 'L' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .filter_map(|s| s.parse().ok())
                .collect();
            Some(nums.chunks(2).map(|xy| Complex64::new(xy[0], -xy[1])).collect())
        })
        .collect()
}
