import argparse
import os.path as osp

import matplotlib.pyplot as plt
import numpy as np
import seaborn as sns

from fraclap.experiments import read_table


def _finish(args, name):
    if args.title is not None:
        plt.title(args.title)
    if args.out is None:
        plt.show()
    else:
        filename = osp.join(args.out, f'{name}.{args.ext}')
        print(f'save figure to: {filename}')
        plt.savefig(filename)
    plt.clf()


def plot_profiles(args):
    """u_riesz / u_spectral (or u0_riesz) over x, one colour per file."""
    palette = sns.color_palette(n_colors=len(args.files))
    for color, filename in zip(palette, args.files):
        _, columns = read_table(filename)
        tag = osp.splitext(osp.basename(filename))[0]
        x = columns['x']
        for name, style in (('u_riesz', '-'), ('u0_riesz', '-'),
                            ('u_spectral', '--')):
            if name in columns:
                plt.plot(x, columns[name], style, color=color,
                         label=f'{tag} {name}', linewidth=1.0)
    plt.xlabel('x')
    if args.ylim is not None:
        plt.ylim(*args.ylim)
    plt.legend()
    _finish(args, 'profiles')


def plot_max_values(args):
    _, columns = read_table(args.files[0])
    plt.plot(columns['s'], columns['u_riesz'], label='riesz')
    plt.plot(columns['s'], columns['u_spectral'], label='spectral')
    plt.xlabel('s')
    plt.ylabel('u(0)')
    plt.legend()
    _finish(args, 'max_values')


def plot_exponent(args):
    _, columns = read_table(args.files[0])
    plt.plot(columns['j'], columns['k'], 'o-', linewidth=0.5)
    plt.axhline(np.median(columns['k']), linestyle=':', color='gray')
    plt.xlabel('j')
    plt.ylabel('k_j')
    _finish(args, 'exponent')


def plot_surface(args):
    """Heat map of one column of a 2D Dirac file."""
    _, columns = read_table(args.files[0])
    x_axis = np.unique(columns['x'])
    y_axis = np.unique(columns['y'])
    values = np.asarray(columns[args.column]).reshape(x_axis.size,
                                                      y_axis.size)
    if args.log:
        values = np.log10(np.abs(values) + np.finfo(float).tiny)
    ax = sns.heatmap(values.T[::-1], cmap=args.cmap, cbar=True,
                     xticklabels=False, yticklabels=False)
    ax.set_xlabel('x')
    ax.set_ylabel('y')
    _finish(args, args.column)


def parse_args():
    parser = argparse.ArgumentParser(description='Plot fraclap result files')
    subparsers = parser.add_subparsers(dest='task', help='task parser')

    for task, helper in (('profiles', 'constant-rhs or dirac --dim 1 files'),
                         ('max_values', 'constant_rhs_max_values file'),
                         ('exponent', 'boundary_layer_exponent file'),
                         ('surface', 'dirac2d file')):
        sub = subparsers.add_parser(task, help=f'plot {helper}')
        sub.add_argument('files', nargs='+', help='result files in csv')
        sub.add_argument('--title', type=str, help='title of figure')
        sub.add_argument('--out', type=str, default=None,
                         help='directory of the saved figure')
        sub.add_argument('--ext', type=str, default='png',
                         help='figure file extension')
        sub.add_argument('--backend', type=str, default=None,
                         help='backend of plt')
        sub.add_argument('--style', type=str, default='whitegrid',
                         help='style of plt')
        if task == 'profiles':
            sub.add_argument('--ylim', type=float, nargs=2, default=None)
        if task == 'surface':
            sub.add_argument('--column', type=str, default='u_spectral')
            sub.add_argument('--cmap', type=str, default='viridis')
            sub.add_argument('--log', action='store_true',
                             help='plot log10 of the absolute values')

    return parser.parse_args()


def main():
    args = parse_args()
    if args.task is None:
        raise SystemExit('a task is required, see --help')
    for filename in args.files:
        assert filename.endswith('.csv'), filename

    if args.backend is not None:
        plt.switch_backend(args.backend)
    sns.set_style(args.style)

    dict(
        profiles=plot_profiles,
        max_values=plot_max_values,
        exponent=plot_exponent,
        surface=plot_surface)[args.task](args)


if __name__ == '__main__':
    main()
