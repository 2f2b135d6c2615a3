"""
Size-band plots of the ring sweep
Renders distance (x) against NOB (y) with one line per ring size (z)
"""

import logging
import os
from typing import List, Sequence, Tuple

import matplotlib
matplotlib.use('Agg')  # Use non-interactive backend
import matplotlib.pyplot as plt
from mpl_toolkits.mplot3d import Axes3D  # noqa: F401  (registers the 3d projection)
import pandas as pd

logger = logging.getLogger(__name__)


def render_size_bands(
    frame: pd.DataFrame, output_dir: str, bands: Sequence[Tuple[int, int]]
) -> List[str]:
    """
    Draw one figure per inclusive size band

    Args:
        frame: long-form data with columns d, nob, n
        output_dir: directory for the PNG files
        bands: (smallest size, largest size) pairs

    Returns:
        list: paths of the written images (bands without data are skipped)
    """
    os.makedirs(output_dir, exist_ok=True)
    written = []
    for low, high in bands:
        band = frame[(frame['n'] >= low) & (frame['n'] <= high)]
        if band.empty:
            logger.info(f"No sweep data for sizes {low}-{high}, skipping plot")
            continue

        fig = plt.figure(figsize=(8, 6))
        ax = fig.add_subplot(111, projection='3d')
        for n, rows in band.groupby('n', sort=True):
            rows = rows.sort_values('d')
            ax.plot(rows['d'], rows['nob'], [n] * len(rows), marker='o', linewidth=1.5)
        ax.set_xlabel('Link distance d')
        ax.set_ylabel('NOB')
        ax.set_zlabel('Network size')
        ax.set_title(f'Externalities and network size ({low}-{high})')

        path = os.path.join(output_dir, f'size_bands_{low}_{high}.png')
        fig.savefig(path, bbox_inches='tight', dpi=150)
        plt.close(fig)
        written.append(path)
    return written
