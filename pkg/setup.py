#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on 16-10-2026 09:10:02

@author: ben
"""

from setuptools import setup, find_packages

setup(name='gmft',
      version='0.1.0',
      description='Gutzwiller mean-field dynamics and Kibble-Zurek scaling for trapped lattice bosons',
      url='',
      author='Benedict Wilkins',
      author_email='benrjw@gmail.com',
      packages=find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
      install_requires=["numpy",
                        "scipy",
                        "torch>=1.10",
                        "h5py",
                        "tqdm"],
      extras_require={"test" : ["pytest>=7"]},
      tests_require=["pytest"],
      entry_points={"console_scripts" : ["gmft=gmft.cli:main"]},
      dependency_links = ["https://download.pytorch.org/whl/torch_stable.html"],
      zip_safe=False)
