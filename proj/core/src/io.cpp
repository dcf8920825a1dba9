namespace linkpres {}
