# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: experimental/scripts/overview.py
# Description: 运行目录概览

import argparse
import json
from pathlib import Path

from tabulate import tabulate


def overview(root: Path) -> None:
    details = []
    for file in sorted(root.rglob('stats.json')):
        with open(file, 'r', encoding='utf-8') as f:
            data = json.load(f)
        metrics = data.get('metrics', {})
        for name, truth in data.get('truth', {}).items():
            details.append({
                'run': str(file.parent.relative_to(root)),
                'param': name,
                'truth': truth,
                'mean': data[name]['mean'],
                'median': data[name]['median'],
                'std': data[name]['standard deviation'],
                'ci_contains_truth': metrics.get(f'{name}.ci_contains_truth'),
                'ks_fail': metrics.get(f'{name}.ks_fail_fraction'),
                'acceptance': data.get('acceptance rate'),
            })

    profiles = []
    for file in sorted(root.rglob('profile.json')):
        with open(file, 'r', encoding='utf-8') as f:
            data = json.load(f)
        profiles.append({
            'run': str(file.parent.relative_to(root)),
            'flatness': data['profile.flatness'],
            'tail_mass': data.get('profile.tail_mass'),
            'verdict': data['profile.verdict'],
            'quadrature_mean': data.get('quadrature.mean'),
        })

    print(tabulate(details, headers='keys', tablefmt='grid', floatfmt='.7g'))
    if profiles:
        print(tabulate(profiles, headers='keys', tablefmt='grid', floatfmt='.4g'))
    print(f'总运行数量: {len({d["run"] for d in details})}')


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('root', nargs='?', type=Path, default=Path('runs'))
    overview(parser.parse_args().root)
