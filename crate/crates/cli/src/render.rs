//! Tuple-board rendering: ASCII grid, SVG, and a JSON document mirroring the
//! snake decomposition.

use comotion_core::{Cell, Snake, TupleBoard};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

const PALETTE: [&str; 10] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#17becf",
    "#bcbd22", "#999999",
];

fn snake_letter(id: usize) -> char {
    (b'A' + (id % 26) as u8) as char
}

fn cell_index(snakes: &[Snake]) -> HashMap<Cell, usize> {
    let mut map = HashMap::new();
    for (id, s) in snakes.iter().enumerate() {
        for &(c, _) in s.cells() {
            map.insert(c, id);
        }
    }
    map
}

/// One line per row; each cell shows its value with the letter of the snake
/// covering it. Zeros render as dots. With the overlay disabled the plain
/// period rows are printed.
pub fn ascii(board: &TupleBoard, with_snakes: bool) -> String {
    let k = board.width();
    let height = if with_snakes {
        board.cylinder_rows()
    } else {
        board.period()
    };
    let snakes = if with_snakes { board.snakes() } else { Vec::new() };
    let by_cell = cell_index(&snakes);
    let width = board
        .rows()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        + usize::from(with_snakes);
    let mut out = String::new();
    for row in 1..=height {
        let mut line = Vec::with_capacity(k);
        for col in 1..=k {
            let cell = Cell { row, col };
            let v = board.value(cell);
            let txt = if v == 0 {
                ".".to_string()
            } else if with_snakes {
                match by_cell.get(&cell) {
                    Some(&id) => format!("{v}{}", snake_letter(id)),
                    None => v.to_string(),
                }
            } else {
                v.to_string()
            };
            line.push(format!("{txt:>width$}"));
        }
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// SVG 1.1 grid, one rectangle per cell, colored by covering snake.
pub fn svg(board: &TupleBoard, with_snakes: bool) -> String {
    let k = board.width();
    let height = board.cylinder_rows();
    let snakes = if with_snakes { board.snakes() } else { Vec::new() };
    let by_cell = cell_index(&snakes);
    let cell_px = 34;
    let w = k * cell_px + 2;
    let h = height * cell_px + 2;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    for row in 1..=height {
        for col in 1..=k {
            let cell = Cell { row, col };
            let v = board.value(cell);
            let fill = if v == 0 {
                "#eeeeee".to_string()
            } else {
                match by_cell.get(&cell) {
                    Some(&id) => PALETTE[id % PALETTE.len()].to_string(),
                    None => "#ffffff".to_string(),
                }
            };
            let x = (col - 1) * cell_px + 1;
            let y = (row - 1) * cell_px + 1;
            out.push_str(&format!(
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{cell_px}\" height=\"{cell_px}\" fill=\"{fill}\" stroke=\"#333333\"/>\n"
            ));
            let label = if v == 0 { String::new() } else { v.to_string() };
            if !label.is_empty() {
                out.push_str(&format!(
                    "  <text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\" fill=\"#000000\">{label}</text>\n",
                    x + cell_px / 2,
                    y + cell_px / 2 + 5
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardDoc {
    pub space: String,
    pub seed: String,
    pub action: String,
    pub nu: Vec<usize>,
    pub period: usize,
    pub cylinder_rows: usize,
    pub rows: Vec<Vec<u32>>,
    pub snakes: Vec<SnakeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnakeDoc {
    pub id: usize,
    pub start_value: u32,
    pub map: Vec<u32>,
    pub cells: Vec<CellDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub row: usize,
    pub col: usize,
    pub value: u32,
}

pub fn board_doc(board: &TupleBoard, space: &str, seed: &str, with_snakes: bool) -> BoardDoc {
    let snakes = if with_snakes { board.snakes() } else { Vec::new() };
    BoardDoc {
        space: space.to_string(),
        seed: seed.to_string(),
        action: board.action().tag().to_string(),
        nu: board.nu().order().to_vec(),
        period: board.period(),
        cylinder_rows: board.cylinder_rows(),
        rows: board.rows().to_vec(),
        snakes: snakes
            .iter()
            .enumerate()
            .map(|(id, s)| SnakeDoc {
                id,
                start_value: s.start().1,
                map: s.map(board.width()),
                cells: s
                    .cells()
                    .iter()
                    .map(|&(c, v)| CellDoc {
                        row: c.row,
                        col: c.col,
                        value: v,
                    })
                    .collect(),
            })
            .collect(),
    }
}

pub fn json(board: &TupleBoard, space: &str, seed: &str, with_snakes: bool) -> String {
    let mut s = serde_json::to_string_pretty(&board_doc(board, space, seed, with_snakes))
        .expect("board serializes");
    s.push('\n');
    s
}
