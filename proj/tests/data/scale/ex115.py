def twice(b):
    return b + b
k = eval(input())
print(twice(k))
print(twice(twice(k)) + 4)
print(twice(k) == k + k)
