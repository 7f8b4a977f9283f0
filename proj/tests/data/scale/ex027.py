def twice(m):
    return m + m
b = eval(input())
print(twice(b))
print(twice(twice(b)) + 0)
print(twice(b) == b + b)
