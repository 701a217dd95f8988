//! Settings file: page size, strokes, default tiling edge and crochet gauge.
//!
//! The file holds `key = value` lines; `#` starts a comment. It is read from
//! `--config-file`, else from the path in `NONEUCLID_CONFIG`, else from
//! `$XDG_CONFIG_HOME/noneuclid/config` (or `~/.config/noneuclid/config`) when
//! that exists. Command-line flags override file values.

use std::path::{Path, PathBuf};

use noneuclid::crochet::Gauge;
use noneuclid::render::RenderStyle;

pub const CONFIG_ENV: &str = "NONEUCLID_CONFIG";

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub style: RenderStyle,
    pub edge_mm: f64,
    pub tab_depth_mm: f64,
    pub gauge: Gauge,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            style: RenderStyle::default(),
            edge_mm: 30.0,
            tab_depth_mm: noneuclid::tiling::DEFAULT_TAB_DEPTH_MM,
            gauge: Gauge::default(),
        }
    }
}

fn positive(key: &str, v: &str) -> Result<f64, String> {
    match v.trim().parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("{key} must be a positive number, got {v:?}")),
    }
}

/// Parses `A,B` as two positive numbers.
pub fn positive_pair(key: &str, v: &str) -> Result<(f64, f64), String> {
    let (a, b) = v
        .split_once(',')
        .ok_or_else(|| format!("{key} must be two numbers as A,B, got {v:?}"))?;
    Ok((positive(key, a)?, positive(key, b)?))
}

impl RenderConfig {
    /// Sets one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let s = &mut self.style.strokes;
        match key {
            "page" => {
                (self.style.page_width_mm, self.style.page_height_mm) = positive_pair(key, value)?;
            }
            "page_width_mm" => self.style.page_width_mm = positive(key, value)?,
            "page_height_mm" => self.style.page_height_mm = positive(key, value)?,
            "margin_mm" => self.style.margin_mm = positive(key, value)?,
            "stroke_cut" => s.cut = positive(key, value)?,
            "stroke_fold" => s.fold = positive(key, value)?,
            "stroke_mountain" => s.mountain = positive(key, value)?,
            "stroke_valley" => s.valley = positive(key, value)?,
            "stroke_geodesic" => s.geodesic = positive(key, value)?,
            "stroke_circle" => s.circle = positive(key, value)?,
            "edge_mm" => self.edge_mm = positive(key, value)?,
            "tab_depth_mm" => self.tab_depth_mm = positive(key, value)?,
            "gauge" => {
                let (w, h) = positive_pair(key, value)?;
                self.gauge = Gauge {
                    stitch_width_mm: w,
                    row_height_mm: h,
                };
            }
            _ => return Err(format!("unknown setting {key:?}")),
        }
        Ok(())
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self, String> {
        let mut cfg = RenderConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("{origin}:{}: expected key = value", i + 1))?;
            cfg.set(k.trim(), v.trim())
                .map_err(|e| format!("{origin}:{}: {e}", i + 1))?;
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        self.style.validate().map_err(|e| e.to_string())
    }
}

fn default_path() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CONFIG_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".config")))?;
    Some(base.join("noneuclid").join("config"))
}

/// Loads settings; an explicitly named file must exist, the default one may
/// be absent.
pub fn load(flag: Option<&Path>) -> Result<RenderConfig, String> {
    let explicit = flag.map(Path::to_path_buf).or_else(|| {
        std::env::var_os(CONFIG_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    });
    let path = match explicit {
        Some(p) => p,
        None => match default_path().filter(|p| p.is_file()) {
            Some(p) => p,
            None => return Ok(RenderConfig::default()),
        },
    };
    let text =
        std::fs::read_to_string(&path).map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    RenderConfig::parse(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_settings_and_comments() {
        let cfg = RenderConfig::parse(
            "# workshop\npage = 297,420\nmargin_mm=15 # wide\n\nstroke_cut = 0.5\ngauge = 6, 5\nedge_mm = 25\n",
            "test",
        )
        .unwrap();
        assert_eq!((cfg.style.page_width_mm, cfg.style.page_height_mm), (297.0, 420.0));
        assert_eq!(cfg.style.margin_mm, 15.0);
        assert_eq!(cfg.style.strokes.cut, 0.5);
        assert_eq!(cfg.gauge.stitch_width_mm, 6.0);
        assert_eq!(cfg.gauge.row_height_mm, 5.0);
        assert_eq!(cfg.edge_mm, 25.0);
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn rejects_bad_lines() {
        let e = RenderConfig::parse("page_width_mm = -3\n", "f").unwrap_err();
        assert!(e.starts_with("f:1: page_width_mm must be a positive number"), "{e}");
        assert!(RenderConfig::parse("colour = red", "f")
            .unwrap_err()
            .contains("unknown setting"));
        assert!(RenderConfig::parse("just words", "f")
            .unwrap_err()
            .contains("key = value"));
        let cfg = RenderConfig::parse("margin_mm = 200", "f").unwrap();
        assert!(cfg.validate().is_err());
    }
}
