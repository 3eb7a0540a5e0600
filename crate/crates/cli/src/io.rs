//! Signal files: two-column CSV for 1-D signals and PGM for square images.

use std::fs;
use std::path::Path;

use qresample::{Shape, Signal};

use crate::error::{CliError, CliResult};

pub const CSV_HEADER: [&str; 2] = ["index", "value"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Pgm,
}

impl Format {
    pub fn from_path(path: &Path) -> CliResult<Self> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase) {
            Some(e) if e == "csv" => Ok(Format::Csv),
            Some(e) if e == "pgm" => Ok(Format::Pgm),
            _ => Err(CliError::config(format!(
                "{}: expected a .csv or .pgm file",
                path.display()
            ))),
        }
    }

    pub fn dims(self) -> usize {
        match self {
            Format::Csv => 1,
            Format::Pgm => 2,
        }
    }
}

pub fn read_csv(path: &Path) -> CliResult<Vec<f64>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| CliError::io(path, e))?;
    let header = reader.headers().map_err(|e| CliError::io(path, e))?;
    if header.iter().map(str::trim).ne(CSV_HEADER) {
        return Err(CliError::io(path, "header must be `index,value`"));
    }
    let mut values = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::io(path, e))?;
        let line = row + 2;
        if record.len() != 2 {
            return Err(CliError::io(path, format!("line {line}: expected two columns")));
        }
        let index: usize = record[0]
            .trim()
            .parse()
            .map_err(|e| CliError::io(path, format!("line {line}: bad index: {e}")))?;
        if index != row {
            return Err(CliError::io(path, format!("line {line}: expected index {row}, found {index}")));
        }
        let value: f64 = record[1]
            .trim()
            .parse()
            .map_err(|e| CliError::io(path, format!("line {line}: bad value: {e}")))?;
        values.push(value);
    }
    Ok(values)
}

/// Values are written with nine decimals.
pub fn csv_string(values: &[f64]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for (i, v) in values.iter().enumerate() {
        writer
            .write_record([i.to_string(), format!("{v:.9}")])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn write_csv(path: &Path, values: &[f64]) -> CliResult<()> {
    fs::write(path, csv_string(values)).map_err(|e| CliError::io(path, e))
}

/// Square grayscale image, pixels row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub side: usize,
    pub maxval: u32,
    pub pixels: Vec<u32>,
}

struct Tokens<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn skip_space(&mut self) {
        while self.pos < self.data.len() {
            match self.data[self.pos] {
                b'#' => {
                    while self.pos < self.data.len() && self.data[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn next(&mut self) -> Option<&'a str> {
        self.skip_space();
        let start = self.pos;
        while self.pos < self.data.len() && !self.data[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.data[start..self.pos]).ok())?
    }

    fn number(&mut self, what: &str) -> Result<u32, String> {
        let tok = self.next().ok_or_else(|| format!("missing {what}"))?;
        tok.parse().map_err(|_| format!("bad {what} `{tok}`"))
    }
}

/// Parses plain (P2) or raw (P5) PGM data.
pub fn parse_pgm(data: &[u8]) -> Result<Image, String> {
    let mut t = Tokens { data, pos: 0 };
    let magic = t.next().ok_or("empty file")?;
    let raw = match magic {
        "P2" => false,
        "P5" => true,
        other => return Err(format!("unsupported magic `{other}`")),
    };
    let width = t.number("width")? as usize;
    let height = t.number("height")? as usize;
    let maxval = t.number("maxval")?;
    if width != height {
        return Err(format!("image is {width}x{height}, only square images are supported"));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(format!("maxval {maxval} outside [1, 65535]"));
    }
    let count = width * height;
    let pixels = if raw {
        // a single whitespace byte separates the header from the raster
        let start = t.pos + 1;
        let bytes = if maxval < 256 { 1 } else { 2 };
        let raster = data.get(start..start + count * bytes).ok_or("truncated raster")?;
        if bytes == 1 {
            raster.iter().map(|&b| u32::from(b)).collect()
        } else {
            raster.chunks_exact(2).map(|c| u32::from(u16::from_be_bytes([c[0], c[1]]))).collect()
        }
    } else {
        (0..count).map(|_| t.number("pixel")).collect::<Result<Vec<_>, _>>()?
    };
    if let Some(p) = pixels.iter().find(|&&p| p > maxval) {
        return Err(format!("pixel {p} exceeds maxval {maxval}"));
    }
    Ok(Image { side: width, maxval, pixels })
}

pub fn read_pgm(path: &Path) -> CliResult<Image> {
    let data = fs::read(path).map_err(|e| CliError::io(path, e))?;
    parse_pgm(&data).map_err(|e| CliError::io(path, e))
}

/// Plain PGM, one image row per line.
pub fn pgm_string(image: &Image) -> String {
    let mut out = format!("P2\n{0} {0}\n{1}\n", image.side, image.maxval);
    for row in image.pixels.chunks(image.side.max(1)) {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_pgm(path: &Path, image: &Image) -> CliResult<()> {
    fs::write(path, pgm_string(image)).map_err(|e| CliError::io(path, e))
}

/// Nearest integer level in `[0, maxval]`, ties rounded up.
pub fn quantize(value: f64, maxval: u32) -> u32 {
    ((value + 0.5 + 1e-9).floor()).clamp(0.0, f64::from(maxval)) as u32
}

/// Loads a signal. PGM images carry their bit depth (`maxval + 1` levels);
/// for CSV files `levels` declares one.
pub fn read_signal(path: &Path, levels: Option<u32>) -> CliResult<(Signal, Format)> {
    let format = Format::from_path(path)?;
    let signal = match format {
        Format::Csv => {
            let values = read_csv(path)?;
            let signal = Signal::from_samples(values).map_err(|e| CliError::io(path, e))?;
            match levels {
                Some(l) => signal.with_bit_depth(l).map_err(|e| CliError::io(path, e))?,
                None => signal,
            }
        }
        Format::Pgm => {
            let image = read_pgm(path)?;
            let shape = Shape::new(2, image.side).map_err(|e| CliError::io(path, e))?;
            let values = image.pixels.iter().map(|&p| f64::from(p)).collect();
            let from_file = image.maxval + 1;
            if levels.is_some_and(|l| l != from_file) {
                return Err(CliError::config(format!(
                    "bit depth {} conflicts with the image maxval {}",
                    levels.unwrap_or_default(),
                    image.maxval
                )));
            }
            Signal::new(shape, values)
                .and_then(|s| s.with_bit_depth(from_file))
                .map_err(|e| CliError::io(path, e))?
        }
    };
    Ok((signal, format))
}

/// Writes a signal; PGM output is quantized to `levels` (default 256).
pub fn write_signal(path: &Path, format: Format, signal: &Signal, levels: Option<u32>) -> CliResult<()> {
    match format {
        Format::Csv => {
            if signal.shape().dims != 1 {
                return Err(CliError::config("CSV output holds one-dimensional signals only"));
            }
            write_csv(path, signal.values())
        }
        Format::Pgm => {
            if signal.shape().dims != 2 {
                return Err(CliError::config("PGM output holds two-dimensional signals only"));
            }
            let maxval = levels.unwrap_or(256).saturating_sub(1).max(1);
            let image = Image {
                side: signal.shape().extent,
                maxval,
                pixels: signal.values().iter().map(|&v| quantize(v, maxval)).collect(),
            };
            write_pgm(path, &image)
        }
    }
}
