def double(s):
    return s + s
k = eval(input())
print(double(k))
print(double(double(k)) + 0)
print(double(k) == k + k)
