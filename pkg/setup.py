"""
Setup script for Snake Calculus.
"""

import sys
import subprocess
from setuptools import setup, find_packages
from setuptools.command.build_py import build_py

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh
                    if line.strip() and not line.startswith("#") and not line.startswith("pyinstaller")]


# 可选的 PyInstaller 构建命令
class BuildPyInstaller(build_py):
    """使用 PyInstaller 构建单文件可执行文件"""

    def run(self):
        try:
            import PyInstaller  # noqa: F401
            print("使用 PyInstaller 构建...")
            subprocess.run([sys.executable, 'build.py', '--onefile'], check=True)
            print("PyInstaller 构建完成!")
        except ImportError:
            print("PyInstaller 未安装，跳过构建")
        except subprocess.CalledProcessError as e:
            print(f"PyInstaller 构建失败: {e}")
            sys.exit(1)


setup(
    name="snake-calculus",
    version="1.0.0",
    author="Snake Calculus",
    description="Snake graph calculus: resolutions, perfect matchings and skein relations for surface cluster algebras",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={
        "test": ["pytest", "hypothesis"],
        "build": ["pyinstaller"],
    },
    entry_points={
        "console_scripts": [
            "snake-calculus=snake_calculus.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "snake_calculus.surface": ["fixtures/*.txt"],
    },
    cmdclass={
        'pyinstaller': BuildPyInstaller,
    },
)
